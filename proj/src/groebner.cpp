#include "lp/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lp {

MonomialOrder::MonomialOrder(std::vector<std::pair<VariableId, std::int64_t>> weightedVariables) {
  for (auto& [v, w] : weightedVariables) {
    if (w <= 0) throw DomainError("MonomialOrder: variable weights must be positive");
    if (!rank_.emplace(v, variables_.size()).second)
      throw DomainError("MonomialOrder: repeated variable");
    variables_.push_back(v);
    weights_.push_back(w);
  }
}

std::size_t MonomialOrder::rank(const VariableId& v) const {
  auto it = rank_.find(v);
  if (it == rank_.end()) throw UnknownVariableError("variable not covered by the monomial order");
  return it->second;
}

std::int64_t MonomialOrder::weight(const Monomial& m) const {
  std::int64_t w = 0;
  for (const auto& [v, e] : m.factors()) w += weight(v) * static_cast<std::int64_t>(e);
  return w;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (auto c = weight(a) <=> weight(b); c != 0) return c;
  // Reverse lexicographic: at the last variable where the exponents differ,
  // the monomial with the smaller exponent is larger.
  std::size_t best = 0;
  bool found = false;
  std::int64_t diff = 0;
  auto consider = [&](const VariableId& v) {
    const std::int64_t d =
        static_cast<std::int64_t>(a.exponent(v)) - static_cast<std::int64_t>(b.exponent(v));
    if (d == 0) return;
    const auto r = rank(v);
    if (!found || r > best) {
      found = true;
      best = r;
      diff = d;
    }
  };
  for (const auto& f : a.factors()) consider(f.first);
  for (const auto& f : b.factors()) consider(f.first);
  if (!found) return std::strong_ordering::equal;
  return diff < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::vector<std::pair<Monomial, Rational>> MonomialOrder::sortedTerms(const Polynomial& f) const {
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [this](const auto& x, const auto& y) { return compare(x.first, y.first) > 0; });
  return terms;
}

Monomial MonomialOrder::leadingMonomial(const Polynomial& f) const {
  if (f.isZero()) throw DomainError("leadingMonomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || compare(m, *best) > 0) best = &m;
  return *best;
}

namespace {

// Dense exponent vectors indexed by variable rank.
struct DMono {
  std::int64_t weight = 0;
  std::vector<std::uint32_t> exps;

  bool operator==(const DMono& o) const { return exps == o.exps; }
};

// Larger monomial first.
struct Greater {
  bool operator()(const DMono& a, const DMono& b) const {
    if (a.weight != b.weight) return a.weight > b.weight;
    for (std::size_t i = a.exps.size(); i-- > 0;)
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
    return false;
  }
};

struct DTerm {
  DMono mono;
  Rational coeff;
};

using DPoly = std::vector<DTerm>;  // sorted, largest monomial first

bool divides(const DMono& a, const DMono& b) {
  if (a.weight > b.weight) return false;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

DMono quotient(const DMono& num, const DMono& den) {
  DMono q{num.weight - den.weight, num.exps};
  for (std::size_t i = 0; i < q.exps.size(); ++i) q.exps[i] -= den.exps[i];
  return q;
}

DMono product(const DMono& a, const DMono& b) {
  DMono p{a.weight + b.weight, a.exps};
  for (std::size_t i = 0; i < p.exps.size(); ++i) p.exps[i] += b.exps[i];
  return p;
}

bool coprime(const DMono& a, const DMono& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

class DenseRing {
public:
  explicit DenseRing(const MonomialOrder& order) : order_(order) {}

  DMono lcm(const DMono& a, const DMono& b) const {
    DMono l{0, a.exps};
    for (std::size_t i = 0; i < l.exps.size(); ++i) l.exps[i] = std::max(a.exps[i], b.exps[i]);
    l.weight = weightOf(l.exps);
    return l;
  }

  std::int64_t weightOf(const std::vector<std::uint32_t>& exps) const {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
      w += order_.weights()[i] * static_cast<std::int64_t>(exps[i]);
    return w;
  }

  DPoly toDense(const Polynomial& f) const {
    DPoly out;
    for (const auto& [m, c] : f.terms()) {
      DMono d{0, std::vector<std::uint32_t>(order_.variables().size(), 0)};
      for (const auto& [v, e] : m.factors()) d.exps[order_.rank(v)] = e;
      d.weight = weightOf(d.exps);
      out.push_back({std::move(d), c});
    }
    std::sort(out.begin(), out.end(),
              [](const DTerm& a, const DTerm& b) { return Greater{}(a.mono, b.mono); });
    return out;
  }

  Polynomial toSparse(const DPoly& f) const {
    Polynomial out;
    for (const auto& t : f) {
      std::vector<Monomial::Factor> factors;
      for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
        if (t.mono.exps[i]) factors.emplace_back(order_.variables()[i], t.mono.exps[i]);
      out.addTerm(Monomial::fromFactors(std::move(factors)), t.coeff);
    }
    return out;
  }

private:
  const MonomialOrder& order_;
};

void makeMonic(DPoly& f) {
  if (f.empty() || f.front().coeff == 1) return;
  const Rational inv = 1 / f.front().coeff;
  for (auto& t : f) t.coeff *= inv;
}

// Full reduction of `f` modulo the (monic) polynomials in `basis`, skipping
// index `skip`.
DPoly reduce(const DPoly& f, const std::vector<DPoly>& basis, std::size_t skip = SIZE_MAX) {
  std::map<DMono, Rational, Greater> work;
  for (const auto& t : f) work.emplace(t.mono, t.coeff);
  DPoly remainder;
  while (!work.empty()) {
    auto top = work.begin();
    const DMono mono = top->first;
    const Rational coeff = top->second;
    work.erase(top);
    const DPoly* divisor = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].empty()) continue;
      if (divides(basis[i].front().mono, mono)) {
        divisor = &basis[i];
        break;
      }
    }
    if (!divisor) {
      remainder.push_back({mono, coeff});
      continue;
    }
    const DMono shift = quotient(mono, divisor->front().mono);
    for (std::size_t k = 1; k < divisor->size(); ++k) {
      const auto& t = (*divisor)[k];
      DMono m = product(t.mono, shift);
      Rational c = -coeff * t.coeff;
      auto [it, inserted] = work.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return remainder;
}

DPoly sPolynomial(const DPoly& f, const DPoly& g, const DMono& lcm) {
  std::map<DMono, Rational, Greater> acc;
  const DMono sf = quotient(lcm, f.front().mono);
  const DMono sg = quotient(lcm, g.front().mono);
  for (std::size_t k = 1; k < f.size(); ++k) acc[product(f[k].mono, sf)] += f[k].coeff;
  for (std::size_t k = 1; k < g.size(); ++k) acc[product(g[k].mono, sg)] -= g[k].coeff;
  DPoly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return out;
}

struct PendingPair {
  std::int64_t weight;
  std::size_t j;
  std::size_t i;
  auto operator<=>(const PendingPair&) const = default;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leadingMonomials() const {
  std::vector<Monomial> out;
  for (const auto& g : polynomials) out.push_back(order.leadingMonomial(g));
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerLimits& limits) {
  DenseRing ring(order);
  std::vector<DPoly> basis;
  std::vector<DMono> lcmCache;
  std::set<PendingPair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pendingIndex;

  auto addPolynomial = [&](DPoly f) {
    makeMonic(f);
    const std::size_t k = basis.size();
    basis.push_back(std::move(f));
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].empty()) continue;
      const DMono l = ring.lcm(basis[i].front().mono, basis[k].front().mono);
      pending.insert({l.weight, k, i});
      pendingIndex.emplace(i, k);
    }
  };

  for (const auto& g : generators) {
    if (g.isZero()) continue;
    addPolynomial(ring.toDense(g));
  }

  std::uint64_t reduced = 0;
  while (!pending.empty()) {
    const PendingPair pair = *pending.begin();
    pending.erase(pending.begin());
    pendingIndex.erase({pair.i, pair.j});
    const DPoly& f = basis[pair.i];
    const DPoly& g = basis[pair.j];
    if (coprime(f.front().mono, g.front().mono)) continue;
    const DMono l = ring.lcm(f.front().mono, g.front().mono);

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j || basis[k].empty()) continue;
      if (!divides(basis[k].front().mono, l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair(std::min(a, b), std::max(a, b)); };
      if (!pendingIndex.count(key(pair.i, k)) && !pendingIndex.count(key(pair.j, k))) chain = true;
    }
    if (chain) continue;

    if (++reduced > limits.maxSPairs)
      throw ResourceLimitError("Groebner basis: more than " + std::to_string(limits.maxSPairs) +
                               " S-pairs reduced");
    if (l.weight > limits.maxWeight)
      throw ResourceLimitError("Groebner basis: S-pair of weight " + std::to_string(l.weight) +
                               " exceeds the budget " + std::to_string(limits.maxWeight));
    DPoly r = reduce(sPolynomial(f, g, l), basis);
    if (!r.empty()) addPolynomial(std::move(r));
  }

  // Minimize.
  std::vector<DPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      if (divides(basis[k].front().mono, basis[i].front().mono)) {
        // Equal leading monomials: keep the one with the smaller index.
        redundant = !(basis[k].front().mono == basis[i].front().mono) || k < i;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    DPoly head{minimal[i].front()};
    DPoly tail(minimal[i].begin() + 1, minimal[i].end());
    DPoly reducedTail = reduce(tail, minimal, i);
    head.insert(head.end(), reducedTail.begin(), reducedTail.end());
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [](const DPoly& a, const DPoly& b) {
    return Greater{}(a.front().mono, b.front().mono);
  });

  GroebnerBasis out;
  out.order = order;
  out.sPairsReduced = reduced;
  for (const auto& f : minimal) out.polynomials.push_back(ring.toSparse(f));
  return out;
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis) {
  DenseRing ring(basis.order);
  std::vector<DPoly> dense;
  for (const auto& g : basis.polynomials) {
    DPoly d = ring.toDense(g);
    makeMonic(d);
    dense.push_back(std::move(d));
  }
  return ring.toSparse(reduce(ring.toDense(f), dense));
}

}  // namespace lp
