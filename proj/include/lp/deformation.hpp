#ifndef LP_DEFORMATION_HPP
#define LP_DEFORMATION_HPP

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "lp/matrix.hpp"
#include "lp/polynomial.hpp"
#include "lp/poset.hpp"

namespace lp {

/// Generators p1*q2 - T(p)*S_p(q) of J(2,P), indexed like letterplaceGenerators.
struct DeformedIdeal {
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Polynomial> generators;
};

/// Recursive construction of the deformed ideal J(2,P) for a rooted tree.
///
/// Every element a with children b^1..b^m (linear-extension order, b^0 = a)
/// carries the m x (m+1) matrix M(a) whose entry in row j, column i is the
/// symbol S_{b^i}T_{b^i}(b^j).  Its signed maximal minors D(a)^{b^i} feed the
/// cover products R(a,b) and the operators S_a, which in turn fill the
/// matrices of the elements below.  Values are memoized; a context must be
/// confined to one thread at a time.
class DeformationContext {
public:
  explicit DeformationContext(RootedTree tree);

  const RootedTree& tree() const { return tree_; }
  const Poset& poset() const { return tree_.poset(); }

  /// T_c(b) for c the parent of b or a sibling c != b.  RelationError otherwise.
  Polynomial tSub(Element c, Element b) const;
  /// T(b); the root gives u_{0,root}.
  Polynomial tFull(Element b) const;
  /// T_c(b) extended by T_b(b) = T(b).
  Polynomial tForm(Element c, Element b) const;

  /// The symbol S_xT_x(b): b1 for x = b, -u_{parent,b} for the parent, and the
  /// composition S_x(T_x(b)) for a sibling x.
  Polynomial stEntry(Element x, Element b) const;

  /// Column index of x in M(a): 0 for a itself, i for the child b^i.
  std::size_t columnIndex(Element a, Element x) const;

  /// LeafError when a is maximal.
  PolyMatrix matrixM(Element a) const;

  /// D(a)^{b^i} = (-1)^i |M(a) without column i|; D(a)^a = 1 for maximal a.
  Polynomial minorD(Element a, std::size_t column) const;
  /// D(a)^x addressed by element.
  Polynomial minorDOf(Element a, Element x) const;

  /// D(a)^{b^cols}_{b^rows}: delete columns `cols` (indices 0..m) and rows
  /// `rows` (indices 1..m); the sign is (-1) raised to the index sums plus the
  /// inversion counts of both sequences.
  Polynomial generalizedMinor(Element a, const std::vector<std::size_t>& cols,
                              const std::vector<std::size_t>& rows) const;

  /// Product of D(p)^q over the covers p < q on the chain from a to b.
  Polynomial coverProductR(Element a, Element b) const;

  /// S_a(b_2) = R(a,b) * D(b)^b.
  Polynomial sOp(Element a, Element b) const;
  /// Linear extension of S_a to sums of (u-monomial) * q_2 with q >= a.
  Polynomial sOpLinear(Element a, const Polynomial& f) const;

  /// p1*q2 - T(p)*S_p(q).
  Polynomial deformedGenerator(Element p, Element q) const;
  DeformedIdeal jIdealGenerators() const;

  void clearMemo() const;

private:
  void requireLeq(Element a, Element b) const;

  RootedTree tree_;
  mutable std::map<std::pair<Element, std::size_t>, Polynomial> minorMemo_;
  mutable std::map<std::pair<Element, Element>, Polynomial> sMemo_;
  mutable std::map<std::pair<Element, Element>, Polynomial> rMemo_;
  mutable std::map<Element, Polynomial> tMemo_;
};

}  // namespace lp

#endif  // LP_DEFORMATION_HPP
