#include <doctest.h>

#include <set>

#include "lp/cotangent.hpp"
#include "lp/fixture.hpp"
#include "lp/grading.hpp"
#include "lp/letterplace.hpp"
#include "support.hpp"

using namespace lp;
using lp::test::el;

namespace {

const char* kExample66 = "a < c\na < d\nb < c\nb < d\nc < e\nd < e\n";

using Sets = std::set<std::set<std::string>>;

Sets named(const Poset& P, const std::vector<std::vector<Element>>& sets) {
  Sets out;
  for (const auto& s : sets) {
    std::set<std::string> names;
    for (Element e : s) names.insert(P.name(e));
    out.insert(names);
  }
  return out;
}

std::vector<Element> complementOf(const Poset& P, std::vector<Element> removed) {
  std::vector<Element> out;
  for (Element e = 0; e < static_cast<Element>(P.size()); ++e)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) out.push_back(e);
  return out;
}

std::vector<Element> withSelf(std::vector<Element> v, Element p) {
  v.push_back(p);
  return v;
}

std::set<std::pair<Element, Monomial>> pairsOf(const std::vector<T1Generator>& gs) {
  std::set<std::pair<Element, Monomial>> out;
  for (const auto& g : gs) out.emplace(g.source, g.image);
  return out;
}

bool isAntichain(const Poset& P, const std::vector<Element>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (P.comparable(s[i], s[j])) return false;
  return true;
}

}  // namespace

TEST_SUITE("cotangent") {
  TEST_CASE("bound sets of the worked example") {
    const Poset P = parsePoset(kExample66);
    const Element a = el(P, "a"), c = el(P, "c");

    const auto withinA = complementOf(P, withSelf(P.strictFilterAbove(a), a));
    CHECK(named(P, minimalUpperBoundSets(P, {}, withinA)) == Sets{{}});
    const auto withinC = complementOf(P, withSelf(P.strictFilterAbove(c), c));
    CHECK(named(P, minimalUpperBoundSets(P, P.strictIdealBelow(c), withinC)) == Sets{{"a", "b"}, {"d"}});

    const auto belowA = complementOf(P, withSelf(P.strictIdealBelow(a), a));
    CHECK(named(P, minimalLowerBoundSets(P, P.strictFilterAbove(a), belowA)) == Sets{{"c", "d"}, {"b"}});
    const auto belowC = complementOf(P, withSelf(P.strictIdealBelow(c), c));
    CHECK(named(P, minimalLowerBoundSets(P, P.strictFilterAbove(c), belowC)) == Sets{{"d"}, {"e"}});

    CHECK(named(P, minimalLowerBoundSets(P, {}, belowC)) == Sets{{}});
    // no bound available
    CHECK(minimalUpperBoundSets(P, {el(P, "e")}, {a}).empty());
  }

  TEST_CASE("bound sets on a chain") {
    const Poset P = test::chain(3).poset();
    CHECK(named(P, minimalUpperBoundSets(P, {el(P, "a")}, {el(P, "a")})) == Sets{{"a"}});
  }

  TEST_CASE("generators of the worked example") {
    const Poset P = parsePoset(kExample66);
    const auto gens = t1Generators(P);
    CHECK(gens.size() == 11);
    std::set<std::string> lines;
    for (const auto& g : gens) lines.insert(renderT1(g, P));
    CHECK(lines.count("a1*a2 -> c1*d1") == 1);
    CHECK(lines.count("a1*a2 -> b1") == 1);
    CHECK(lines.count("c1*c2 -> d1*a2*b2") == 1);
    CHECK(lines.count("c1*c2 -> e1*a2*b2") == 1);
    CHECK(lines.count("c1*c2 -> e1*d2") == 1);

    const auto fx = readT1Fixture(test::fixture("example66.T1.txt"));
    CHECK(fx.count == 11);
    const auto cmp = compareT1Fixture(gens, fx, P);
    CHECK(cmp.pass);
  }

  TEST_CASE("small cases") {
    const Poset single = parsePoset("elem a");
    const auto g1 = t1Generators(single);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].image.isOne());
    CHECK(renderT1(g1[0], single) == "a1*a2 -> 1");

    const Poset ch = test::chain(2).poset();
    std::set<std::string> lines;
    for (const auto& g : t1Generators(ch)) lines.insert(renderT1(g, ch));
    CHECK(lines == std::set<std::string>{"a1*a2 -> b1", "b1*b2 -> a2"});

    const RootedTree chT = test::chain(2);
    lines.clear();
    for (const auto& g : t1GeneratorsTree(chT)) lines.insert(renderT1(g, ch));
    CHECK(lines == std::set<std::string>{"a1*a2 -> b1", "b1*b2 -> a2"});

    CHECK(t1GeneratorsTree(test::star(2)).size() == 5);
    CHECK(t1GeneratorsTree(test::treeOf("elem a")).size() == 1);
  }

  TEST_CASE("tree corollary agrees with the general theorem") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& T : enumerateRootedTrees(n)) {
        const auto general = t1Generators(T.poset());
        const auto tree = t1GeneratorsTree(T);
        CHECK(pairsOf(general) == pairsOf(tree));
        CHECK(general.size() == tree.size());
      }
  }

  TEST_CASE("pairing with u variables is degree compatible") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& T : enumerateRootedTrees(n)) {
        const auto tree = t1GeneratorsTree(T);
        const auto us = uVariables(T);
        CHECK(tree.size() == us.size());
        std::set<VariableId> seen;
        for (const auto& g : tree) {
          REQUIRE(g.parameter.has_value());
          CHECK(g.parameter->lower() == g.source);
          seen.insert(*g.parameter);
          const Monomial source = Monomial(VariableId::x(1, g.source)) * Monomial(VariableId::x(2, g.source));
          CHECK(variableDegree(T, *g.parameter) == monomialDegree(T, source) - monomialDegree(T, g.image));
        }
        CHECK(seen == std::set<VariableId>(us.begin(), us.end()));
      }
  }

  TEST_CASE("images lie outside L and bound sets are antichains") {
    std::vector<Poset> posets{parsePoset(kExample66), parsePoset("a < b\na < c\nd < c\n"),
                              parsePoset("a < b\nb < c\nd < e\n")};
    for (const auto& T : enumerateRootedTrees(5)) posets.push_back(T.poset());
    for (const auto& P : posets) {
      const auto L = letterplaceGenerators(P);
      for (const auto& g : t1Generators(P)) {
        for (const auto& m : L.generators) CHECK_FALSE(m.divides(g.image));
        CHECK(isAntichain(P, g.lowerSet));
        CHECK(isAntichain(P, g.upperSet));
        for (Element r : g.lowerSet)
          for (Element s : g.upperSet) CHECK_FALSE(P.leq(r, s));
      }
    }
  }
}
