#include "lp/cotangent.hpp"

#include <algorithm>
#include <functional>

namespace lp {

namespace {

using ElementSet = std::vector<Element>;

std::vector<std::size_t> positions(const Poset& poset, const ElementSet& s) {
  std::vector<std::size_t> out;
  for (Element e : s) out.push_back(poset.position(e));
  return out;
}

bool isSubset(const ElementSet& a, const ElementSet& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](Element e) { return std::find(b.begin(), b.end(), e) != b.end(); });
}

// `covers(s, t)` says that member s of a candidate set bounds target element t.
std::vector<ElementSet> minimalBoundSets(const Poset& poset, const ElementSet& target,
                                         ElementSet within,
                                         const std::function<bool(Element, Element)>& covers) {
  if (within.size() > 24) throw SizeLimitError("bound-set enumeration limited to 24 candidates");
  poset.sortByPosition(within);

  std::vector<ElementSet> bounding;
  ElementSet current;
  const auto bounds = [&]() {
    return std::all_of(target.begin(), target.end(), [&](Element t) {
      return std::any_of(current.begin(), current.end(), [&](Element s) { return covers(s, t); });
    });
  };
  // Antichains of `within` in lexicographic order.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == within.size()) {
      if (bounds()) bounding.push_back(current);
      return;
    }
    walk(i + 1);
    const Element e = within[i];
    if (std::none_of(current.begin(), current.end(), [&](Element c) { return poset.comparable(c, e); })) {
      current.push_back(e);
      walk(i + 1);
      current.pop_back();
    }
  };
  walk(0);

  std::vector<ElementSet> minimal;
  for (const auto& s : bounding) {
    const bool hasSmaller = std::any_of(bounding.begin(), bounding.end(), [&](const ElementSet& o) {
      return o.size() < s.size() && isSubset(o, s);
    });
    if (!hasSmaller) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const ElementSet& a, const ElementSet& b) {
    return positions(poset, a) < positions(poset, b);
  });
  return minimal;
}

ElementSet complementOf(const Poset& poset, const std::function<bool(Element)>& excluded) {
  ElementSet out;
  for (Element e : poset.linearExtension())
    if (!excluded(e)) out.push_back(e);
  return out;
}

Monomial imageOf(const ElementSet& lower, const ElementSet& upper) {
  std::vector<Monomial::Factor> factors;
  for (Element r : lower) factors.emplace_back(VariableId::x(1, r), 1);
  for (Element s : upper) factors.emplace_back(VariableId::x(2, s), 1);
  return Monomial::fromFactors(std::move(factors));
}

}  // namespace

std::vector<std::vector<Element>> minimalUpperBoundSets(const Poset& poset,
                                                        const std::vector<Element>& target,
                                                        const std::vector<Element>& within) {
  return minimalBoundSets(poset, target, within, [&](Element s, Element t) { return poset.leq(t, s); });
}

std::vector<std::vector<Element>> minimalLowerBoundSets(const Poset& poset,
                                                        const std::vector<Element>& target,
                                                        const std::vector<Element>& within) {
  return minimalBoundSets(poset, target, within, [&](Element r, Element t) { return poset.leq(r, t); });
}

std::vector<T1Generator> t1Generators(const Poset& poset) {
  std::vector<T1Generator> out;
  for (Element p : poset.linearExtension()) {
    const auto below = poset.strictIdealBelow(p);
    const auto above = poset.strictFilterAbove(p);
    const auto uppers =
        minimalUpperBoundSets(poset, below, complementOf(poset, [&](Element e) { return poset.leq(p, e); }));
    const auto lowers =
        minimalLowerBoundSets(poset, above, complementOf(poset, [&](Element e) { return poset.leq(e, p); }));
    for (const auto& u : uppers) {
      for (const auto& d : lowers) {
        const bool clash = std::any_of(d.begin(), d.end(), [&](Element r) {
          return std::any_of(u.begin(), u.end(), [&](Element s) { return poset.leq(r, s); });
        });
        if (clash) continue;
        out.push_back({p, d, u, imageOf(d, u), std::nullopt});
      }
    }
  }
  return out;
}

std::vector<T1Generator> t1GeneratorsTree(const RootedTree& tree) {
  const Poset& poset = tree.poset();
  std::vector<T1Generator> out;
  for (Element p : poset.linearExtension()) {
    const auto& kids = tree.children(p);
    const auto parent = tree.parent(p);
    if (!parent) {
      out.push_back({p, kids, {}, imageOf(kids, {}), VariableId::u(kNoElement, p)});
      continue;
    }
    for (Element q : poset.linearExtension())
      if (q != p && tree.meet(q, p) == *parent)
        out.push_back({p, kids, {q}, imageOf(kids, {q}), VariableId::u(q, p)});
  }
  return out;
}

std::string renderT1(const T1Generator& g, const Poset& poset) {
  const std::string& p = poset.name(g.source);
  std::string image;
  for (Element r : g.lowerSet) image += (image.empty() ? "" : "*") + poset.name(r) + "1";
  for (Element s : g.upperSet) image += (image.empty() ? "" : "*") + poset.name(s) + "2";
  return p + "1*" + p + "2 -> " + (image.empty() ? "1" : image);
}

}  // namespace lp
