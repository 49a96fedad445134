#ifndef LP_LETTERPLACE_HPP
#define LP_LETTERPLACE_HPP

#include <utility>
#include <vector>

#include "lp/groebner.hpp"
#include "lp/polynomial.hpp"
#include "lp/poset.hpp"

namespace lp {

/// Generators p1*q2 of L(2,P), one per comparable pair p <= q.
struct LetterplaceIdeal {
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Monomial> generators;

  /// Generators as polynomials, in the same order.
  std::vector<Polynomial> polynomials() const;
};

/// Pairs ordered by (position(p), position(q)) in the linear extension.
LetterplaceIdeal letterplaceGenerators(const Poset& poset);

/// Codimension of L(2,P); equals |P| (reported, not computed).
inline std::size_t letterplaceCodimension(const Poset& poset) { return poset.size(); }

/// Deformation parameters: u_{0,root} followed by every u_{q,p} with
/// meet(q,p) = parent(p), ordered by p then q in the linear extension.
std::vector<VariableId> uVariables(const RootedTree& tree);

/// All x-variables in linear-extension order, place 1 before place 2.
std::vector<VariableId> xVariables(const Poset& poset);

}  // namespace lp

#endif  // LP_LETTERPLACE_HPP
