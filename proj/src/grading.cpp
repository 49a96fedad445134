#include "lp/grading.hpp"

#include <algorithm>
#include <functional>

#include "lp/letterplace.hpp"

namespace lp {

MultiDegree MultiDegree::unit(std::size_t posetSize, int place, Element p) {
  MultiDegree d(posetSize);
  d.at(place, p) = 1;
  return d;
}

bool MultiDegree::isZero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& o) {
  if (c_.empty()) c_.assign(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_.at(i) += o.c_[i];
  return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& o) {
  if (c_.empty()) c_.assign(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_.at(i) -= o.c_[i];
  return *this;
}

MultiDegree operator*(std::int64_t k, MultiDegree a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::string renderDegree(const MultiDegree& d, const Poset& poset) {
  std::string out;
  for (Element p : poset.linearExtension()) {
    for (int place = 1; place <= 2; ++place) {
      const std::int64_t k = d.at(place, p);
      if (k == 0) continue;
      if (out.empty())
        out += k < 0 ? "-" : "";
      else
        out += k < 0 ? " - " : " + ";
      const std::int64_t mag = k < 0 ? -k : k;
      if (mag != 1) out += std::to_string(mag) + "*";
      out += poset.name(p) + std::to_string(place);
    }
  }
  return out.empty() ? "0" : out;
}

MultiDegree hatDegree(const RootedTree& tree, Element p) {
  MultiDegree d = MultiDegree::unit(tree.size(), 2, p);
  for (Element b : tree.children(p)) d.at(1, b) -= 1;
  return d;
}

MultiDegree variableDegree(const RootedTree& tree, const VariableId& v) {
  const std::size_t n = tree.size();
  const auto valid = [n](Element e) { return e >= 0 && static_cast<std::size_t>(e) < n; };
  if (v.isX()) {
    if (!valid(v.element()) || (v.place != 1 && v.place != 2))
      throw UnknownVariableError("unknown x-variable");
    return MultiDegree::unit(n, v.place, v.element());
  }
  const Element p = v.lower();
  if (!valid(p)) throw UnknownVariableError("unknown u-variable");
  if (v.upper() == kNoElement) {
    if (p != tree.root()) throw UnknownVariableError("u[0," + tree.poset().name(p) + "] is not a parameter");
    return MultiDegree::unit(n, 1, p) + hatDegree(tree, p);
  }
  const Element q = v.upper();
  const auto parent = tree.parent(p);
  if (!valid(q) || q == p || !parent || tree.meet(q, p) != *parent)
    throw UnknownVariableError("u-variable is not a deformation parameter");
  return MultiDegree::unit(n, 1, p) - MultiDegree::unit(n, 2, q) + hatDegree(tree, p);
}

MultiDegree monomialDegree(const RootedTree& tree, const Monomial& m) {
  MultiDegree d(tree.size());
  for (const auto& [v, e] : m.factors()) d += static_cast<std::int64_t>(e) * variableDegree(tree, v);
  return d;
}

Homogeneity homogeneousDegree(const RootedTree& tree, const Polynomial& f) {
  Homogeneity out;
  std::optional<Monomial> first;
  for (const auto& [m, c] : f.terms()) {
    MultiDegree d = monomialDegree(tree, m);
    if (!first) {
      first = m;
      out.degree = std::move(d);
    } else if (d != *out.degree) {
      out.homogeneous = false;
      out.degree.reset();
      out.witness = std::pair(*first, m);
      return out;
    }
  }
  return out;
}

std::int64_t WeightMap::weight(const VariableId& v) const {
  for (const auto& [var, w] : entries)
    if (var == v) return w;
  throw UnknownVariableError("variable has no weight");
}

WeightMap positivityWitness(const RootedTree& tree) {
  const Poset& poset = tree.poset();
  const std::size_t n = tree.size();
  // d as a vector over the symbols, filled from the top of the tree down.
  MultiDegree d(n);
  const auto& order = poset.linearExtension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Element p = *it;
    d.at(2, p) = 1;
    std::int64_t sum = 1;
    for (Element b : tree.children(p)) sum += d.at(1, b);
    d.at(1, p) = sum;
  }
  const auto evaluate = [&](const MultiDegree& deg) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < deg.components().size(); ++i) w += deg.components()[i] * d.components()[i];
    return w;
  };

  WeightMap out;
  std::vector<VariableId> vars = xVariables(poset);
  const auto us = uVariables(tree);
  vars.insert(vars.end(), us.begin(), us.end());
  for (const auto& v : vars) {
    const std::int64_t w = evaluate(variableDegree(tree, v));
    if (w <= 0) throw DomainError("non-positive weight in positivity witness");
    out.entries.emplace_back(v, w);
  }
  return out;
}

MonomialOrder defaultOrder(const RootedTree& tree) {
  return MonomialOrder(positivityWitness(tree).entries);
}

std::vector<std::uint64_t> countStandardMonomials(const std::vector<Monomial>& leading,
                                                  const WeightMap& weights,
                                                  std::int64_t maxDegree) {
  if (maxDegree < 0) return {};
  const std::size_t nv = weights.entries.size();
  std::map<VariableId, std::size_t> slot;
  for (std::size_t i = 0; i < nv; ++i) slot.emplace(weights.entries[i].first, i);

  std::vector<std::vector<std::uint32_t>> lead;
  for (const auto& m : leading) {
    std::vector<std::uint32_t> e(nv, 0);
    for (const auto& [v, k] : m.factors()) {
      auto it = slot.find(v);
      if (it == slot.end()) throw UnknownVariableError("leading monomial uses an unweighted variable");
      e[it->second] = k;
    }
    lead.push_back(std::move(e));
  }

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(maxDegree) + 1, 0);
  if (std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.isOne(); })) return counts;
  std::vector<std::uint32_t> exps(nv, 0);
  const auto divisible = [&]() {
    for (const auto& l : lead) {
      bool divides = true;
      for (std::size_t i = 0; i < nv && divides; ++i) divides = l[i] <= exps[i];
      if (divides) return true;
    }
    return false;
  };
  // Depth-first over exponent vectors; once a partial monomial lies in the
  // initial ideal, so do all of its multiples.
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t w) {
    if (i == nv) {
      ++counts[static_cast<std::size_t>(w)];
      return;
    }
    const std::int64_t wi = weights.entries[i].second;
    for (std::uint32_t e = 0; w + wi * e <= maxDegree; ++e) {
      exps[i] = e;
      if (e > 0 && divisible()) break;
      walk(i + 1, w + wi * e);
    }
    exps[i] = 0;
  };
  walk(0, 0);
  return counts;
}

std::vector<std::uint64_t> truncatedHilbert(const std::vector<Polynomial>& gens,
                                            const WeightMap& weights, std::int64_t maxDegree,
                                            const GroebnerLimits& limits) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.isZero()) nonzero.push_back(g);
  std::vector<Monomial> leading;
  if (!nonzero.empty()) leading = buchberger(nonzero, MonomialOrder(weights.entries), limits).leadingMonomials();
  return countStandardMonomials(leading, weights, maxDegree);
}

}  // namespace lp
