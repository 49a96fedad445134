#include "lp/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "lp/cotangent.hpp"
#include "lp/letterplace.hpp"
#include "lp/render.hpp"

namespace lp {

namespace {

using Clock = std::chrono::steady_clock;

double millisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string joinCounts(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

CheckReport makeReport(std::string name, std::string instance) {
  CheckReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  return r;
}

Polynomial leadingPair(Element p, Element q) { return xVar(1, p) * xVar(2, q); }

}  // namespace

bool allPass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

Verifier::Verifier(const RootedTree& tree, GroebnerLimits limits)
    : ctx_(tree), pairs_(tree.poset().comparablePairs()), order_(defaultOrder(tree)), limits_(limits) {
  generators_ = ctx_.jIdealGenerators().generators;
}

Verifier::Verifier(const RootedTree& tree, std::vector<Polynomial> generators, GroebnerLimits limits)
    : ctx_(tree),
      pairs_(tree.poset().comparablePairs()),
      generators_(std::move(generators)),
      order_(defaultOrder(tree)),
      limits_(limits) {
  if (generators_.size() != pairs_.size())
    throw ShapeError("expected one generator per comparable pair");
}

const GroebnerBasis& Verifier::basis() {
  if (!basis_) basis_ = buchberger(generators_, order_, limits_);
  return *basis_;
}

const Polynomial& Verifier::generator(Element p, Element q) const {
  auto it = std::find(pairs_.begin(), pairs_.end(), std::pair(p, q));
  if (it == pairs_.end()) throw NotComparableError("no generator for an incomparable pair");
  return generators_[static_cast<std::size_t>(it - pairs_.begin())];
}

std::string Verifier::names(std::initializer_list<std::pair<const char*, Element>> items) const {
  std::string out;
  for (const auto& [label, e] : items) {
    if (!out.empty()) out += ' ';
    out += std::string(label) + "=" + ctx_.poset().name(e);
  }
  return out;
}

CheckReport Verifier::membership(std::string name, std::string instance, const Polynomial& expr,
                                 bool requireUPositive) {
  const auto start = Clock::now();
  CheckReport r = makeReport(std::move(name), std::move(instance));
  r.witness = normalForm(expr, basis());
  r.pass = r.witness.isZero();
  if (r.pass && requireUPositive && !expr.everyTermHasU()) {
    r.pass = false;
    Polynomial free;
    for (const auto& [m, c] : expr.terms())
      if (m.uDegree() == 0) free.addTerm(m, c);
    r.witness = free;
    r.detail = "terms without a u-variable";
  }
  r.elapsedMs = millisSince(start);
  return r;
}

CheckReport Verifier::checkSpecialization() {
  const auto start = Clock::now();
  CheckReport r = makeReport("specialization", "");
  const Poset& P = ctx_.poset();
  for (std::size_t i = 0; i < pairs_.size() && r.pass; ++i) {
    const auto [p, q] = pairs_[i];
    const Polynomial& g = generators_[i];
    const Polynomial head = leadingPair(p, q);
    r.instance = names({{"p", p}, {"q", q}});
    if (g.specializeU() != head) {
      r.pass = false;
      r.witness = g.specializeU() - head;
      r.detail = "u -> 0 does not give " + renderPolynomial(head, P);
      break;
    }
    // A lift of p1*q2 must live in the degree of p1*q2.
    const MultiDegree target = monomialDegree(ctx_.tree(), head.terms().begin()->first);
    Polynomial off;
    for (const auto& [m, c] : g.terms())
      if (monomialDegree(ctx_.tree(), m) != target) off.addTerm(m, c);
    if (!off.isZero()) {
      r.pass = false;
      r.witness = off;
      r.detail = "terms outside the degree of " + renderPolynomial(head, P);
    }
  }
  if (r.pass) r.instance = "all " + std::to_string(pairs_.size()) + " generators";
  r.elapsedMs = millisSince(start);
  return r;
}

CheckReport Verifier::checkHomogeneity() {
  const auto start = Clock::now();
  CheckReport r = makeReport("homogeneity", "all " + std::to_string(pairs_.size()) + " generators");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto h = homogeneousDegree(ctx_.tree(), generators_[i]);
    if (!h.homogeneous) {
      r.pass = false;
      r.instance = names({{"p", pairs_[i].first}, {"q", pairs_[i].second}});
      r.witness = generators_[i];
      r.detail = renderMonomial(h.witness->first, ctx_.poset()) + " and " +
                 renderMonomial(h.witness->second, ctx_.poset()) + " differ in degree";
      break;
    }
  }
  r.elapsedMs = millisSince(start);
  return r;
}

CheckReport Verifier::checkDegreeFormulas() {
  const auto start = Clock::now();
  const RootedTree& T = ctx_.tree();
  const Poset& P = T.poset();
  const std::size_t n = T.size();
  CheckReport r = makeReport("degree-formulas", "");
  std::size_t checked = 0;
  const auto expect = [&](const std::string& what, const Polynomial& f, const MultiDegree& want) {
    if (!r.pass) return;
    ++checked;
    const auto h = homogeneousDegree(T, f);
    if (!h.homogeneous || !h.degree || *h.degree != want) {
      r.pass = false;
      r.instance = what;
      r.witness = f;
      r.detail = "expected degree " + renderDegree(want, P) +
                 (h.degree ? ", got " + renderDegree(*h.degree, P) : std::string(", not homogeneous"));
    }
  };
  for (Element p : P.linearExtension()) {
    const MultiDegree hatP = hatDegree(T, p);
    expect("T(" + P.name(p) + ")", ctx_.tFull(p), MultiDegree::unit(n, 1, p) + hatP);
    expect("D(" + P.name(p) + ")^" + P.name(p), ctx_.minorD(p, 0), MultiDegree::unit(n, 2, p) - hatP);
    for (Element q : T.children(p))
      expect("D(" + P.name(p) + ")^" + P.name(q), ctx_.minorDOf(p, q), hatDegree(T, q) - hatP);
    for (Element q : P.linearExtension()) {
      if (P.leq(p, q))
        expect("S_" + P.name(p) + "(" + P.name(q) + ")", ctx_.sOp(p, q), MultiDegree::unit(n, 2, q) - hatP);
      if (T.isSibling(q, p))
        expect("S_" + P.name(q) + "T_" + P.name(q) + "(" + P.name(p) + ")", ctx_.stEntry(q, p),
               MultiDegree::unit(n, 1, p) + hatP - hatDegree(T, q));
    }
  }
  if (r.pass) r.instance = std::to_string(checked) + " polynomials";
  r.elapsedMs = millisSince(start);
  return r;
}

CheckReport Verifier::checkFlatBasic(Element p, Element b, Element c) {
  const Polynomial expr = ctx_.sOp(p, b) * xVar(2, c) - xVar(2, b) * ctx_.sOp(p, c);
  return membership("flat-basic", names({{"p", p}, {"b", b}, {"c", c}}), expr);
}

std::vector<CheckReport> Verifier::checkFlatBasicAll() {
  std::vector<CheckReport> out;
  const Poset& P = ctx_.poset();
  for (Element p : P.linearExtension())
    for (Element b : P.linearExtension())
      for (Element c : P.linearExtension())
        if (P.leq(p, b) && P.leq(p, c)) out.push_back(checkFlatBasic(p, b, c));
  return out;
}

std::vector<CheckReport> Verifier::checkLemmaIdentities() {
  std::vector<CheckReport> out;
  const RootedTree& T = ctx_.tree();
  const Poset& P = T.poset();
  const auto& order = P.linearExtension();

  // Siblings of p including p itself.
  const auto family = [&](Element p) {
    std::vector<Element> s{p};
    for (Element q : T.siblings(p)) s.push_back(q);
    P.sortByPosition(s);
    return s;
  };

  for (Element p : order) {
    for (Element q : family(p))
      for (Element b : order)
        if (P.leq(p, b)) {
          const Polynomial expr = ctx_.stEntry(p, q) * xVar(2, b) - ctx_.tForm(p, q) * ctx_.sOp(p, b);
          out.push_back(membership("lemma-ts", names({{"p", p}, {"q", q}, {"b", b}}), expr));
        }
    for (Element q : family(p))
      for (Element r : family(p)) {
        const Polynomial expr = ctx_.stEntry(p, q) * ctx_.tForm(p, r) - ctx_.tForm(p, q) * ctx_.stEntry(p, r);
        out.push_back(membership("lemma-stt", names({{"p", p}, {"q", q}, {"r", r}}), expr));
      }
  }

  for (Element a : order) {
    const auto& kids = T.children(a);
    const std::size_t m = kids.size();
    if (m < 2) continue;
    // sum over the children x of D(a)^{cols}_x * form(x)
    const auto sum = [&](std::vector<std::size_t> cols, auto form) {
      Polynomial s;
      for (std::size_t k = 1; k <= m; ++k) s += ctx_.generalizedMinor(a, cols, {k}) * form(kids[k - 1]);
      return s;
    };
    for (std::size_t ib = 1; ib <= m; ++ib)
      for (std::size_t ic = 1; ic <= m; ++ic) {
        if (ib == ic) continue;
        const Element b = kids[ib - 1];
        const Element c = kids[ic - 1];
        out.push_back(membership("lemma-dt-parent", names({{"a", a}, {"b", b}, {"c", c}}),
                                 sum({ib, ic}, [&](Element x) { return ctx_.tSub(a, x); })));
        out.push_back(membership("lemma-dt-ab", names({{"a", a}, {"b", b}, {"c", c}}),
                                 sum({0, ib}, [&](Element x) { return ctx_.tForm(c, x); })));
        for (std::size_t id = 1; id <= m; ++id) {
          if (id == ib || id == ic) continue;
          const Element d = kids[id - 1];
          out.push_back(membership("lemma-dt-sibling", names({{"a", a}, {"b", b}, {"c", c}, {"d", d}}),
                                   sum({ib, ic}, [&](Element x) { return ctx_.tForm(d, x); })));
        }
      }
  }
  return out;
}

CheckReport Verifier::checkFlatP2(Element a, Element b) {
  const Polynomial expr =
      xVar(1, a) * ctx_.tFull(b) - ctx_.tFull(a) * ctx_.coverProductR(a, b) * xVar(1, b);
  return membership("flat-p2", names({{"a", a}, {"b", b}}), expr);
}

std::vector<CheckReport> Verifier::checkFlatP2All() {
  std::vector<CheckReport> out;
  for (const auto& [a, b] : pairs_) out.push_back(checkFlatP2(a, b));
  return out;
}

std::vector<CheckReport> Verifier::checkRelationLifts() {
  std::vector<CheckReport> out;
  const Poset& P = ctx_.poset();
  const auto& order = P.linearExtension();
  for (Element a : order)
    for (Element b : order)
      for (Element c : order) {
        if (P.leq(a, b) && P.leq(a, c)) {
          const Polynomial expr = xVar(2, c) * generator(a, b) - xVar(2, b) * generator(a, c);
          out.push_back(membership("lift-type1", names({{"a", a}, {"b", b}, {"c", c}}), expr, true));
        }
        if (P.leq(a, b) && P.leq(b, c)) {
          const Polynomial expr = xVar(1, b) * generator(a, c) - xVar(1, a) * generator(b, c);
          out.push_back(membership("lift-type2", names({{"a", a}, {"b", b}, {"c", c}}), expr, true));
        }
      }
  return out;
}

CheckReport Verifier::compareHilbert(std::int64_t maxDegree) {
  const auto start = Clock::now();
  const WeightMap weights = positivityWitness(ctx_.tree());
  const auto hL = countStandardMonomials(letterplaceGenerators(ctx_.poset()).generators, weights, maxDegree);
  const auto hJ = countStandardMonomials(basis().leadingMonomials(), weights, maxDegree);
  CheckReport r = makeReport("hilbert", "d-degree <= " + std::to_string(maxDegree));
  r.pass = hL == hJ;
  r.detail = "L " + joinCounts(hL) + " J " + joinCounts(hJ);
  r.elapsedMs = millisSince(start);
  return r;
}

CheckReport Verifier::checkT1Correspondence() {
  const auto start = Clock::now();
  const RootedTree& T = ctx_.tree();
  const Poset& P = T.poset();
  CheckReport r = makeReport("t1-correspondence", "");
  const auto fail = [&](std::string why) {
    if (!r.pass) return;
    r.pass = false;
    r.detail = std::move(why);
  };

  const auto tree = t1GeneratorsTree(T);
  const auto general = t1Generators(P);
  std::set<std::pair<Element, Monomial>> fromTree, fromGeneral;
  for (const auto& g : tree) fromTree.emplace(g.source, g.image);
  for (const auto& g : general) fromGeneral.emplace(g.source, g.image);
  if (fromTree != fromGeneral) fail("tree formula and general enumeration differ");

  const auto us = uVariables(T);
  std::set<VariableId> params, expected(us.begin(), us.end());
  for (const auto& g : tree) params.insert(*g.parameter);
  if (tree.size() != us.size() || params != expected) fail("maps and deformation parameters are not in bijection");

  const auto letterplace = letterplaceGenerators(P).generators;
  for (const auto& g : tree) {
    const Monomial source = Monomial(VariableId::x(1, g.source)) * Monomial(VariableId::x(2, g.source));
    if (variableDegree(T, *g.parameter) != monomialDegree(T, source) - monomialDegree(T, g.image))
      fail("degree mismatch for " + renderT1(g, P));
    for (const auto& l : letterplace)
      if (l.divides(g.image)) fail("image of " + renderT1(g, P) + " lies in L");
  }
  r.instance = std::to_string(tree.size()) + " maps";
  r.elapsedMs = millisSince(start);
  return r;
}

std::vector<CheckReport> Verifier::runSuite(Suite suite, std::int64_t maxDegree) {
  std::vector<CheckReport> out{checkSpecialization(), checkHomogeneity(), checkDegreeFormulas(),
                               checkT1Correspondence()};
  if (suite == Suite::Basic) return out;
  const auto append = [&out](std::vector<CheckReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(checkFlatBasicAll());
  append(checkLemmaIdentities());
  append(checkFlatP2All());
  append(checkRelationLifts());
  out.push_back(compareHilbert(maxDegree));
  return out;
}

}  // namespace lp
