#include <doctest.h>

#include <algorithm>

#include "lp/poset.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lp;
using lp::test::el;

namespace {

std::vector<std::string> namesOf(const Poset& P, const std::vector<Element>& v) {
  std::vector<std::string> out;
  for (auto e : v) out.push_back(P.name(e));
  return out;
}

// Canonical parenthesization of the subtree at e.
std::string shape(const RootedTree& T, Element e) {
  std::vector<std::string> kids;
  for (Element c : T.children(e)) kids.push_back(shape(T, c));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

const char* kExample66 = "a < c\na < d\nb < c\nb < d\nc < e\nd < e\n";
const char* kAppendix = "a < b\na < c\na < d\nd < e\ne < f\ne < g\n";

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("parse chain and star") {
    const Poset chain = parsePoset("a < b\nb < c");
    CHECK(chain.size() == 3);
    CHECK(chain.lt(el(chain, "a"), el(chain, "c")));
    CHECK(chain.covers().size() == 2);

    const Poset star = parsePoset("a < b\na < c");
    CHECK(star.leq(el(star, "a"), el(star, "b")));
    CHECK_FALSE(star.comparable(el(star, "b"), el(star, "c")));
  }

  TEST_CASE("cycles and malformed input") {
    CHECK_THROWS_AS(parsePoset("a < b\nb < a"), CycleError);
    CHECK_THROWS_AS(parsePoset("a < a"), CycleError);
    CHECK_THROWS_AS(parsePoset("a << b"), ParseError);
    CHECK_THROWS_AS(parsePoset("1a < b"), ParseError);
    CHECK_THROWS_AS(readPosetFile("does/not/exist.poset"), ParseError);
  }

  TEST_CASE("duplicate covers, comments and redundant relations") {
    const Poset p = parsePoset("# comment\na < b\n\na < b\nb < c\na < c  # implied\n");
    CHECK(p.size() == 3);
    CHECK(p.covers().size() == 2);  // transitive reduction drops a < c
    CHECK(p.names() == std::vector<std::string>{"a", "b", "c"});
  }

  TEST_CASE("first-appearance indexing and elem lines") {
    const Poset p = parsePoset("elem z\nc < a\n");
    CHECK(p.names() == std::vector<std::string>{"z", "c", "a"});
    CHECK(namesOf(p, p.linearExtension()) == std::vector<std::string>{"c", "a", "z"});
  }

  TEST_CASE("linear extension tie-break") {
    CHECK(namesOf(test::chain(4).poset(), test::chain(4).poset().linearExtension()) ==
          std::vector<std::string>{"a", "b", "c", "d"});
    const Poset star = parsePoset("a < c\na < b");
    CHECK(namesOf(star, star.linearExtension()) == std::vector<std::string>{"a", "b", "c"});
    const Poset ex = parsePoset(kExample66);
    CHECK(namesOf(ex, ex.linearExtension()) == std::vector<std::string>{"a", "b", "c", "d", "e"});
  }

  TEST_CASE("closure is a partial order and covers are its reduction") {
    for (const char* text : {kExample66, kAppendix, "a < b\nb < c\nc < d"}) {
      const Poset P = parsePoset(text);
      const auto n = static_cast<Element>(P.size());
      for (Element p = 0; p < n; ++p) {
        CHECK(P.leq(p, p));
        for (Element q = 0; q < n; ++q) {
          if (p != q) CHECK_FALSE((P.leq(p, q) && P.leq(q, p)));
          for (Element r = 0; r < n; ++r)
            if (P.leq(p, q) && P.leq(q, r)) CHECK(P.leq(p, r));
          // q covers p iff p < q with nothing strictly between
          bool between = false;
          for (Element r = 0; r < n; ++r) between = between || (P.lt(p, r) && P.lt(r, q));
          CHECK(P.covers(p, q) == (P.lt(p, q) && !between));
        }
      }
    }
  }

  TEST_CASE("strict ideal and filter") {
    const Poset ex = parsePoset(kExample66);
    CHECK(ex.strictIdealBelow(el(ex, "a")).empty());
    CHECK(namesOf(ex, ex.strictFilterAbove(el(ex, "a"))) == std::vector<std::string>{"c", "d", "e"});
    CHECK(namesOf(ex, ex.strictIdealBelow(el(ex, "c"))) == std::vector<std::string>{"a", "b"});
    const Poset ch = test::chain(4).poset();
    CHECK(namesOf(ch, ch.strictIdealBelow(el(ch, "b"))) == std::vector<std::string>{"a"});
    CHECK(namesOf(ch, ch.strictFilterAbove(el(ch, "b"))) == std::vector<std::string>{"c", "d"});
  }

  TEST_CASE("order ideals") {
    for (std::size_t n = 1; n <= 15; ++n) CHECK(countOrderIdeals(test::chain(n).poset()) == n + 1);
    CHECK(countOrderIdeals(parsePoset("a < b\na < c")) == 5);
    CHECK(countOrderIdeals(parsePoset(kExample66)) == 8);
    for (const char* text : {kExample66, kAppendix, "a < b\na < c\nd < c\n"}) {
      const Poset P = parsePoset(text);
      CHECK(countOrderIdeals(P) == oracle::bruteForceOrderIdeals(P));
    }
    std::string big;
    for (int i = 0; i < 21; ++i) big += "elem e" + std::to_string(i) + "\n";
    CHECK_THROWS_AS(countOrderIdeals(parsePoset(big)), SizeLimitError);
  }

  TEST_CASE("rooted trees") {
    const RootedTree ch = test::chain(4);
    CHECK(ch.poset().name(ch.root()) == "a");
    CHECK(*ch.parent(el(ch.poset(), "d")) == el(ch.poset(), "c"));
    CHECK_FALSE(ch.parent(ch.root()).has_value());
    CHECK(ch.depth(el(ch.poset(), "a")) == 3);
    CHECK(ch.depth(el(ch.poset(), "d")) == 0);
    CHECK(ch.meet(el(ch.poset(), "c"), el(ch.poset(), "b")) == el(ch.poset(), "b"));

    const RootedTree single = test::treeOf("elem a");
    CHECK(single.root() == 0);
    CHECK(single.isMaximal(0));

    try {
      asRootedTree(parsePoset(kExample66));
      FAIL("expected NotATreeError");
    } catch (const NotATreeError& e) {
      CHECK_FALSE(e.element().empty());
    }
    try {
      asRootedTree(parsePoset("a < c\na < d\nb < c"));
      FAIL("expected NotATreeError");
    } catch (const NotATreeError& e) {
      CHECK((e.element() == "c" || e.element() == "b"));
    }
    CHECK_THROWS_AS(asRootedTree(parsePoset("a < b\nc < d")), NotATreeError);
  }

  TEST_CASE("appendix tree structure") {
    const RootedTree T = test::treeOf(kAppendix);
    const Poset& P = T.poset();
    CHECK(T.meet(el(P, "f"), el(P, "g")) == el(P, "e"));
    CHECK(T.meet(el(P, "f"), el(P, "b")) == el(P, "a"));
    CHECK(T.depth(el(P, "a")) == 3);
    CHECK(namesOf(P, T.children(el(P, "a"))) == std::vector<std::string>{"b", "c", "d"});
    CHECK(namesOf(P, T.siblings(el(P, "c"))) == std::vector<std::string>{"b", "d"});
    CHECK(namesOf(P, T.chain(el(P, "a"), el(P, "g"))) == std::vector<std::string>{"a", "d", "e", "g"});
    CHECK_THROWS_AS(T.chain(el(P, "b"), el(P, "c")), NotComparableError);
  }

  TEST_CASE("tree invariants on every small tree") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20};
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto trees = enumerateRootedTrees(n);
      CHECK(trees.size() == expected[n - 1]);
      for (const auto& T : trees) {
        const Poset& P = T.poset();
        const auto N = static_cast<Element>(P.size());
        for (Element p = 0; p < N; ++p) {
          if (auto par = T.parent(p)) CHECK(T.depth(*par) >= T.depth(p) + 1);
          for (Element q = 0; q < N; ++q) {
            const Element m = T.meet(p, q);
            CHECK(P.leq(m, p));
            CHECK(P.leq(m, q));
            for (Element r = 0; r < N; ++r)
              if (P.leq(r, p) && P.leq(r, q)) CHECK(P.leq(r, m));
            // intervals are chains
            if (P.leq(p, q)) {
              for (Element x = 0; x < N; ++x)
                for (Element y = 0; y < N; ++y)
                  if (P.leq(p, x) && P.leq(x, q) && P.leq(p, y) && P.leq(y, q)) CHECK(P.comparable(x, y));
            }
          }
        }
      }
      std::vector<std::string> shapes;
      for (const auto& T : trees) shapes.push_back(shape(T, T.root()));
      std::sort(shapes.begin(), shapes.end());
      CHECK(std::adjacent_find(shapes.begin(), shapes.end()) == shapes.end());
    }
  }

  TEST_CASE("json export") {
    CHECK(posetToJson(parsePoset("a < b\na < c")) ==
          R"({"elements":["a","b","c"],"covers":[["a","b"],["a","c"]],"root":"a"})");
    CHECK(posetToJson(parsePoset(kExample66)).find("\"root\":null") != std::string::npos);
  }
}
