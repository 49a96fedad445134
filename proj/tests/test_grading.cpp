#include <doctest.h>

#include <set>

#include "lp/deformation.hpp"
#include "lp/grading.hpp"
#include "lp/letterplace.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lp;
using lp::test::el;
using lp::test::poly;

namespace {

MultiDegree deg(const Poset& P, std::initializer_list<std::tuple<int, const char*, int>> parts) {
  MultiDegree d(P.size());
  for (const auto& [place, name, k] : parts) d.at(place, el(P, name)) += k;
  return d;
}

// Exponent vectors of `ms` over the variable list of `w`.
std::vector<std::vector<std::uint32_t>> exponents(const WeightMap& w, const std::vector<Monomial>& ms) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& m : ms) {
    std::vector<std::uint32_t> e;
    for (const auto& [v, weight] : w.entries) e.push_back(m.exponent(v));
    out.push_back(e);
  }
  return out;
}

std::vector<std::int64_t> weightsOf(const WeightMap& w) {
  std::vector<std::int64_t> out;
  for (const auto& [v, weight] : w.entries) out.push_back(weight);
  return out;
}

}  // namespace

TEST_SUITE("grading") {
  TEST_CASE("hat degrees") {
    const RootedTree ch = test::chain(3);
    const Poset& C = ch.poset();
    CHECK(hatDegree(ch, el(C, "c")) == deg(C, {{2, "c", 1}}));
    CHECK(hatDegree(ch, el(C, "b")) == deg(C, {{2, "b", 1}, {1, "c", -1}}));
    const RootedTree st = test::star(2);
    CHECK(hatDegree(st, st.root()) == deg(st.poset(), {{2, "a", 1}, {1, "b", -1}, {1, "c", -1}}));
    CHECK(renderDegree(hatDegree(st, st.root()), st.poset()) == "a2 - b1 - c1");
  }

  TEST_CASE("variable degrees") {
    const RootedTree ch = test::chain(3);
    const Poset& C = ch.poset();
    CHECK(variableDegree(ch, VariableId::x(1, el(C, "a"))) == MultiDegree::unit(3, 1, el(C, "a")));
    CHECK(variableDegree(ch, VariableId::u(el(C, "a"), el(C, "b"))) ==
          deg(C, {{1, "b", 1}, {2, "a", -1}, {2, "b", 1}, {1, "c", -1}}));
    CHECK_THROWS_AS(variableDegree(ch, VariableId::u(el(C, "b"), el(C, "a"))), UnknownVariableError);
    CHECK_THROWS_AS(variableDegree(ch, VariableId::x(1, 7)), UnknownVariableError);

    const RootedTree single = test::treeOf("elem a");
    CHECK(variableDegree(single, VariableId::u(kNoElement, 0)) == deg(single.poset(), {{1, "a", 1}, {2, "a", 1}}));
  }

  TEST_CASE("homogeneity") {
    const RootedTree ch = test::chain(3);
    const Poset& C = ch.poset();
    const auto h = homogeneousDegree(ch, poly("b1*b2 - a2*u[a,b]*c1", C));
    CHECK(h.homogeneous);
    CHECK(*h.degree == deg(C, {{1, "b", 1}, {2, "b", 1}}));

    const auto bad = homogeneousDegree(ch, poly("a1 + a2", C));
    CHECK_FALSE(bad.homogeneous);
    REQUIRE(bad.witness.has_value());
    const std::set<Monomial> pair{bad.witness->first, bad.witness->second};
    CHECK(pair == std::set<Monomial>{Monomial(VariableId::x(1, 0)), Monomial(VariableId::x(2, 0))});

    CHECK(homogeneousDegree(ch, Polynomial()).homogeneous);
  }

  TEST_CASE("every deformed generator is homogeneous of its monomial degree") {
    std::size_t trees = 0;
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& T : enumerateRootedTrees(n)) {
        ++trees;
        const DeformationContext ctx(T);
        const auto J = ctx.jIdealGenerators();
        for (std::size_t i = 0; i < J.generators.size(); ++i) {
          const auto h = homogeneousDegree(T, J.generators[i]);
          CHECK(h.homogeneous);
          const auto [p, q] = J.pairs[i];
          CHECK(*h.degree == MultiDegree::unit(n, 1, p) + MultiDegree::unit(n, 2, q));
        }
      }
    CHECK(trees == 1 + 1 + 2 + 4 + 9 + 20);
  }

  TEST_CASE("positivity witness") {
    const RootedTree single = test::treeOf("elem a");
    const auto w1 = positivityWitness(single);
    CHECK(w1.weight(VariableId::x(1, 0)) == 1);
    CHECK(w1.weight(VariableId::x(2, 0)) == 1);
    CHECK(w1.weight(VariableId::u(kNoElement, 0)) == 2);

    const RootedTree ch = test::chain(2);
    const auto w2 = positivityWitness(ch);
    CHECK(w2.weight(VariableId::x(1, 0)) == 2);
    CHECK(w2.weight(VariableId::x(1, 1)) == 1);
    CHECK(w2.weight(VariableId::u(0, 1)) == 1);

    const RootedTree st = test::star(2);
    const auto w3 = positivityWitness(st);
    CHECK(w3.weight(VariableId::x(1, st.root())) == 3);
    for (const auto& v : uVariables(st)) CHECK(w3.weight(v) == (v.upper() == kNoElement ? 2 : 1));

    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& T : enumerateRootedTrees(n)) {
        const auto w = positivityWitness(T);
        CHECK(w.entries.size() == 2 * n + uVariables(T).size());
        for (const auto& [v, weight] : w.entries) CHECK(weight > 0);
        // weights are the d-image of the multidegree
        for (const auto& [v, weight] : w.entries) {
          const auto d = variableDegree(T, v);
          std::int64_t image = 0;
          for (Element p = 0; p < static_cast<Element>(n); ++p)
            image += d.at(1, p) * w.weight(VariableId::x(1, p)) + d.at(2, p) * w.weight(VariableId::x(2, p));
          CHECK(image == weight);
        }
      }
    CHECK_THROWS_AS(w1.weight(VariableId::u(0, 0)), UnknownVariableError);
  }

  TEST_CASE("truncated Hilbert functions") {
    const RootedTree single = test::treeOf("elem a");
    const Poset& A = single.poset();
    const auto w = positivityWitness(single);
    CHECK(truncatedHilbert({poly("a1*a2", A)}, w, 3) == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(truncatedHilbert({poly("a1*a2 - u[0,a]", A)}, w, 3) == std::vector<std::uint64_t>{1, 2, 3, 4});
    const WeightMap one{{{VariableId::x(1, 0), 1}}};
    CHECK(truncatedHilbert({}, one, 5) == std::vector<std::uint64_t>(6, 1));
    CHECK(truncatedHilbert({Polynomial(1)}, one, 2) == std::vector<std::uint64_t>(3, 0));
  }

  TEST_CASE("standard monomial counts agree with exhaustive enumeration") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& T : enumerateRootedTrees(n)) {
        const auto w = positivityWitness(T);
        const auto L = letterplaceGenerators(T.poset());
        const std::int64_t N = n <= 2 ? 6 : 4;
        const auto expected = oracle::countAvoiding(weightsOf(w), exponents(w, L.generators), N);
        CHECK(countStandardMonomials(L.generators, w, N) == expected);
        CHECK(truncatedHilbert(L.polynomials(), w, N) == expected);

        const DeformationContext ctx(T);
        const auto J = ctx.jIdealGenerators().generators;
        const GroebnerBasis G = buchberger(J, defaultOrder(T));
        CHECK(truncatedHilbert(J, w, N) ==
              oracle::countAvoiding(weightsOf(w), exponents(w, G.leadingMonomials()), N));
      }
  }

  TEST_CASE("monotone under inclusion") {
    const RootedTree st = test::star(2);
    const Poset& S = st.poset();
    const auto w = positivityWitness(st);
    auto small = letterplaceGenerators(S).polynomials();
    auto large = small;
    large.push_back(poly("u[a,b]*u[b,c]", S));
    auto larger = large;
    larger.push_back(poly("b1", S));
    const auto h0 = truncatedHilbert(small, w, 5);
    const auto h1 = truncatedHilbert(large, w, 5);
    const auto h2 = truncatedHilbert(larger, w, 5);
    for (std::size_t i = 0; i < h0.size(); ++i) {
      CHECK(h0[i] >= h1[i]);
      CHECK(h1[i] >= h2[i]);
    }
    CHECK(h0 != h2);
  }

  TEST_CASE("default order puts the letterplace monomial first") {
    for (std::size_t n = 1; n <= 5; ++n)
      for (const auto& T : enumerateRootedTrees(n)) {
        const DeformationContext ctx(T);
        const auto J = ctx.jIdealGenerators();
        const auto order = defaultOrder(T);
        for (std::size_t i = 0; i < J.generators.size(); ++i) {
          const auto [p, q] = J.pairs[i];
          CHECK(order.leadingMonomial(J.generators[i]) ==
                Monomial(VariableId::x(1, p)) * Monomial(VariableId::x(2, q)));
        }
      }
  }
}
