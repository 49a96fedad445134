#ifndef LP_GROEBNER_HPP
#define LP_GROEBNER_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lp/polynomial.hpp"

namespace lp {

/// Weighted-degree term order with a reverse-lexicographic tie-break on a
/// fixed variable sequence (the last variable in the sequence is the
/// smallest).  Every weight must be positive.
class MonomialOrder {
public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<std::pair<VariableId, std::int64_t>> weightedVariables);

  const std::vector<VariableId>& variables() const { return variables_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  bool contains(const VariableId& v) const { return rank_.count(v) != 0; }
  /// Position in the variable sequence; UnknownVariableError if absent.
  std::size_t rank(const VariableId& v) const;
  std::int64_t weight(const VariableId& v) const { return weights_[rank(v)]; }
  std::int64_t weight(const Monomial& m) const;

  /// `greater` means `a` is the larger monomial.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  /// Terms sorted from largest to smallest monomial.
  std::vector<std::pair<Monomial, Rational>> sortedTerms(const Polynomial& f) const;
  /// Leading monomial; precondition !f.isZero().
  Monomial leadingMonomial(const Polynomial& f) const;

private:
  std::vector<VariableId> variables_;
  std::vector<std::int64_t> weights_;
  std::map<VariableId, std::size_t> rank_;
};

struct GroebnerLimits {
  std::uint64_t maxSPairs = 1'000'000;
  std::int64_t maxWeight = 10'000;
};

/// Reduced Groebner basis: monic, leading monomials pairwise non-divisible,
/// tails fully reduced, sorted by decreasing leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> polynomials;
  MonomialOrder order;
  std::uint64_t sPairsReduced = 0;

  std::vector<Monomial> leadingMonomials() const;
};

/// Buchberger's algorithm with the product and chain criteria.
/// Throws ResourceLimitError when a budget in `limits` is exceeded.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerLimits& limits = {});

/// Complete division remainder of `f` by `basis`; zero iff f lies in the ideal.
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace lp

#endif  // LP_GROEBNER_HPP
