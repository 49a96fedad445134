#ifndef LP_COTANGENT_HPP
#define LP_COTANGENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lp/polynomial.hpp"
#include "lp/poset.hpp"

namespace lp {

/// The map p1*p2 -> prod_{r in D} r1 * prod_{s in U} s2 of T^1(S/L(2,P)).
struct T1Generator {
  Element source = 0;
  std::vector<Element> lowerSet;  // D, linear-extension order
  std::vector<Element> upperSet;  // U, linear-extension order
  Monomial image;
  /// The deformation parameter this map pairs with (tree enumeration only).
  std::optional<VariableId> parameter;
};

/// Inclusion-minimal U within `within` such that every target element lies
/// below some member of U.  Results are antichains sorted lexicographically by
/// linear-extension positions.  SizeLimitError if |within| > 24.
std::vector<std::vector<Element>> minimalUpperBoundSets(const Poset& poset,
                                                        const std::vector<Element>& target,
                                                        const std::vector<Element>& within);
/// Dual of minimalUpperBoundSets.
std::vector<std::vector<Element>> minimalLowerBoundSets(const Poset& poset,
                                                        const std::vector<Element>& target,
                                                        const std::vector<Element>& within);

/// Minimal generators for an arbitrary finite poset, ordered by source, then
/// U, then D.
std::vector<T1Generator> t1Generators(const Poset& poset);

/// Closed form for rooted trees: p1p2 -> q2 * prod b1 for every q with
/// meet(q,p) = parent(p), and root1 root2 -> prod b1.
std::vector<T1Generator> t1GeneratorsTree(const RootedTree& tree);

/// `a1*a2 -> c1*d1`; an empty image renders as `1`.
std::string renderT1(const T1Generator& g, const Poset& poset);

}  // namespace lp

#endif  // LP_COTANGENT_HPP
