#ifndef LP_GRADING_HPP
#define LP_GRADING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lp/groebner.hpp"
#include "lp/polynomial.hpp"
#include "lp/poset.hpp"

namespace lp {

/// Element of the free abelian group on the symbols p1, p2 (p in P).
/// Component 2*p + (place - 1) holds the coefficient of p_place.
class MultiDegree {
public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t posetSize) : c_(2 * posetSize, 0) {}
  static MultiDegree unit(std::size_t posetSize, int place, Element p);

  std::int64_t at(int place, Element p) const { return c_.at(slot(place, p)); }
  std::int64_t& at(int place, Element p) { return c_.at(slot(place, p)); }
  const std::vector<std::int64_t>& components() const { return c_; }
  bool isZero() const;

  MultiDegree& operator+=(const MultiDegree& o);
  MultiDegree& operator-=(const MultiDegree& o);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
  friend MultiDegree operator*(std::int64_t k, MultiDegree a);
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

private:
  static std::size_t slot(int place, Element p) {
    return 2 * static_cast<std::size_t>(p) + static_cast<std::size_t>(place - 1);
  }
  std::vector<std::int64_t> c_;
};

/// `a1 + 2*b2 - c1`, in linear-extension order; `0` for the zero vector.
std::string renderDegree(const MultiDegree& d, const Poset& poset);

/// p^ = p2 - sum of b1 over the children b of p.
MultiDegree hatDegree(const RootedTree& tree, Element p);

/// p_i -> unit vector; u_{q,p} -> p1 - q2 + p^; u_{0,root} -> root1 + root^.
/// UnknownVariableError for a u-variable that is not a deformation parameter.
MultiDegree variableDegree(const RootedTree& tree, const VariableId& v);
MultiDegree monomialDegree(const RootedTree& tree, const Monomial& m);

/// Either the common degree of every monomial of f, or two monomials of
/// different degree.  The zero polynomial is homogeneous with no degree.
struct Homogeneity {
  bool homogeneous = true;
  std::optional<MultiDegree> degree;
  std::optional<std::pair<Monomial, Monomial>> witness;
};
Homogeneity homogeneousDegree(const RootedTree& tree, const Polynomial& f);

/// Positive integer weights of all variables of B(2,P), x-variables first
/// (linear-extension order, place 1 then 2), then u-variables.
struct WeightMap {
  std::vector<std::pair<VariableId, std::int64_t>> entries;
  std::int64_t weight(const VariableId& v) const;
};

/// d(p2) = 1 and d(p1) = 1 + sum of d(b1) over the children b of p, extended
/// to the u-variables through variableDegree.  DomainError should some
/// variable receive a non-positive weight.
WeightMap positivityWitness(const RootedTree& tree);

/// Weighted revlex order built from positivityWitness.
MonomialOrder defaultOrder(const RootedTree& tree);

/// Number of monomials of each weight 0..maxDegree (over the variables of
/// `weights`) divisible by none of `leading`.
std::vector<std::uint64_t> countStandardMonomials(const std::vector<Monomial>& leading,
                                                  const WeightMap& weights,
                                                  std::int64_t maxDegree);

/// Hilbert function of B / (gens) in d-degrees 0..maxDegree, via the
/// standard monomials of a Groebner basis under the weighted order.
std::vector<std::uint64_t> truncatedHilbert(const std::vector<Polynomial>& gens,
                                            const WeightMap& weights, std::int64_t maxDegree,
                                            const GroebnerLimits& limits = {});

}  // namespace lp

#endif  // LP_GRADING_HPP
