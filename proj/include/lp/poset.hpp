#ifndef LP_POSET_HPP
#define LP_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lp/errors.hpp"

namespace lp {

/// Index of an element inside its poset (first-appearance order).
using Element = std::int32_t;

/// Finite poset given by its cover relations.
///
/// Elements are identified by short ASCII names and indexed in order of first
/// appearance.  The order relation is stored as a dense closure matrix; all
/// queries are O(1) or linear in |P|.
class Poset {
public:
  Poset() = default;

  /// Builds the poset generated by `relations` (each pair (p,q) means p < q).
  /// Throws CycleError when the relations force p < p.
  static Poset fromRelations(std::vector<std::string> names,
                             const std::vector<std::pair<Element, Element>>& relations);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_.at(static_cast<std::size_t>(e)); }
  std::optional<Element> find(std::string_view name) const;
  /// Like find() but throws ParseError for unknown names.
  Element index(std::string_view name) const;

  bool leq(Element p, Element q) const { return leq_[idx(p) * size() + idx(q)]; }
  bool lt(Element p, Element q) const { return p != q && leq(p, q); }
  bool comparable(Element p, Element q) const { return leq(p, q) || leq(q, p); }

  /// Cover pairs (p,q), q covers p, sorted by (position(p), position(q)).
  const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }
  bool covers(Element p, Element q) const;
  std::vector<Element> upperCovers(Element p) const;
  std::vector<Element> lowerCovers(Element p) const;

  /// Topological order; ties broken by element name.
  const std::vector<Element>& linearExtension() const { return linearExtension_; }
  /// Position of `e` in linearExtension().
  std::size_t position(Element e) const { return position_.at(idx(e)); }

  /// J(<p) and F(>p), both in linear-extension order.
  std::vector<Element> strictIdealBelow(Element p) const;
  std::vector<Element> strictFilterAbove(Element p) const;

  std::vector<Element> minimalElements() const;
  std::vector<Element> maximalElements() const;

  /// Pairs (p,q) with p <= q, sorted by (position(p), position(q)).
  std::vector<std::pair<Element, Element>> comparablePairs() const;

  /// Sorts a set of elements into linear-extension order.
  void sortByPosition(std::vector<Element>& elements) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

private:
  static std::size_t idx(Element e) { return static_cast<std::size_t>(e); }

  std::vector<std::string> names_;
  std::vector<bool> leq_;  // row-major closure matrix
  std::vector<std::pair<Element, Element>> covers_;
  std::vector<Element> linearExtension_;
  std::vector<std::size_t> position_;
};

/// Parses the poset text format: one `p < q` cover per line, optional
/// `elem p` lines, blank lines and `#` comments.
Poset parsePoset(std::string_view text);

/// Reads and parses a poset file; ParseError if it cannot be opened.
Poset readPosetFile(const std::string& path);

/// Number of order ideals (downward-closed subsets).  SizeLimitError if |P| > 20.
std::uint64_t countOrderIdeals(const Poset& poset);

/// `{"elements":[...], "covers":[[p,q],...], "root": name|null}`.
std::string posetToJson(const Poset& poset);

/// A poset whose Hasse diagram is a tree with its unique minimal element at
/// the bottom.
class RootedTree {
public:
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element root() const { return root_; }

  std::optional<Element> parent(Element e) const;
  /// Children in linear-extension order.
  const std::vector<Element>& children(Element e) const {
    return children_.at(static_cast<std::size_t>(e));
  }
  /// Siblings of `e` other than `e`, in linear-extension order.
  std::vector<Element> siblings(Element e) const;
  bool isSibling(Element b, Element c) const;
  bool isMaximal(Element e) const { return children(e).empty(); }

  /// Deepest common ancestor.
  Element meet(Element p, Element q) const;
  /// Length of the longest chain upwards from `e`.
  std::size_t depth(Element e) const { return depth_.at(static_cast<std::size_t>(e)); }

  /// Elements of the chain from `a` up to `b` (inclusive).  NotComparableError
  /// unless a <= b.
  std::vector<Element> chain(Element a, Element b) const;

  friend RootedTree asRootedTree(const Poset& poset);

private:
  Poset poset_;
  Element root_ = 0;
  std::vector<std::optional<Element>> parent_;
  std::vector<std::vector<Element>> children_;
  std::vector<std::size_t> depth_;
};

/// Succeeds iff the Hasse diagram of `poset` is a rooted tree; otherwise
/// throws NotATreeError naming the offending element.
RootedTree asRootedTree(const Poset& poset);

/// One representative of every unlabeled rooted tree on `n` nodes, with
/// elements named a, b, c, ... in breadth-first order.
std::vector<RootedTree> enumerateRootedTrees(std::size_t n);

}  // namespace lp

#endif  // LP_POSET_HPP
