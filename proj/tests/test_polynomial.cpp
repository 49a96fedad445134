#include <doctest.h>

#include <random>

#include "lp/fixture.hpp"
#include "lp/groebner.hpp"
#include "lp/letterplace.hpp"
#include "lp/matrix.hpp"
#include "lp/render.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lp;
using lp::test::poly;

namespace {

// Two free variables x = x1, y = y1 over a two-element antichain.
const Poset& xy() {
  static const Poset P = parsePoset("elem x\nelem y\n");
  return P;
}

MonomialOrder xyOrder() {
  return MonomialOrder({{VariableId::x(1, 0), 1}, {VariableId::x(1, 1), 1}});
}

bool canonical(const Polynomial& f) {
  for (const auto& [m, c] : f.terms()) {
    if (c == 0) return false;
    for (const auto& [v, e] : m.factors())
      if (e == 0) return false;
  }
  return true;
}

Polynomial randomPolynomial(std::mt19937& rng, const std::vector<VariableId>& vars, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2), pick(0, static_cast<int>(vars.size()) - 1);
  Polynomial f;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> factors;
    for (int k = 0; k < 2; ++k) factors.emplace_back(vars[static_cast<std::size_t>(pick(rng))], exp(rng));
    f += Polynomial(Monomial::fromFactors(factors), coeff(rng));
  }
  return f;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic examples") {
    const Poset P = test::chain(4).poset();
    const Polynomial g = poly("b1*b2 - a2*u[a,b]*c1", P);
    CHECK(add(poly("a1*b2", P), poly("-a1*b2", P)).isZero());
    CHECK(mul(poly("u[a,b]", P), g) == poly("u[a,b]*b1*b2 - a2*u[a,b]^2*c1", P));
    CHECK(scale(g, 0).isZero());

    std::map<VariableId, Polynomial> zeroU;
    for (const auto& v : uVariables(test::chain(4))) zeroU[v] = Polynomial();
    CHECK(substitute(poly("a1*a2 - u[0,a]*b1", P), zeroU) == poly("a1*a2", P));
    CHECK(poly("a1*a2 - u[0,a]*b1", P).specializeU() == poly("a1*a2", P));
  }

  TEST_CASE("randomized arithmetic audit") {
    std::mt19937 rng(20240611);
    const std::vector<VariableId> vars{VariableId::x(1, 0), VariableId::x(2, 0), VariableId::u(kNoElement, 0),
                                       VariableId::u(0, 1)};
    std::uniform_int_distribution<int> val(-5, 5);
    for (int round = 0; round < 200; ++round) {
      const Polynomial f = randomPolynomial(rng, vars, 4);
      const Polynomial g = randomPolynomial(rng, vars, 4);
      const Polynomial h = randomPolynomial(rng, vars, 3);
      CHECK(canonical(f + g));
      CHECK(canonical(f * g));
      CHECK(canonical(f - f));
      CHECK((f - f).isZero());
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      // evaluation homomorphism
      std::map<VariableId, Rational> point;
      for (const auto& v : vars) {
        point[v] = Rational(val(rng), 1 + (round % 3));
        point[v].canonicalize();
      }
      CHECK(oracle::evaluate(f * g, point) == oracle::evaluate(f, point) * oracle::evaluate(g, point));
      CHECK(oracle::evaluate(f + g, point) == oracle::evaluate(f, point) + oracle::evaluate(g, point));
      std::map<VariableId, Polynomial> sub{{vars[0], g}};
      std::map<VariableId, Rational> moved = point;
      moved[vars[0]] = oracle::evaluate(g, point);
      CHECK(oracle::evaluate(f.substitute(sub), point) == oracle::evaluate(f, moved));
    }
  }

  TEST_CASE("determinant examples") {
    const Poset P = test::star(2).poset();
    CHECK(determinant(PolyMatrix::fromRows({{poly("a1", P)}})) == poly("a1", P));
    const auto m = PolyMatrix::fromRows({{poly("-u[a,b]", P), poly("-u[c,b]", P)}, {poly("-u[a,c]", P), poly("c1", P)}});
    CHECK(determinant(m) == poly("-u[a,b]*c1 - u[c,b]*u[a,c]", P));
    const Polynomial x = poly("x1", xy()), y = poly("y1", xy());
    CHECK(determinant(PolyMatrix::fromRows({{x, y}, {y, x}})) == x * x - y * y);
    CHECK(determinant(PolyMatrix(0, 0)) == Polynomial(1));
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), NonSquareError);
    CHECK_THROWS_AS(PolyMatrix::fromRows({{x, y}, {x}}), ShapeError);
    CHECK_THROWS_AS(m.without({5}, {}), IndexError);
  }

  TEST_CASE("determinant agrees with permutation expansion") {
    std::mt19937 rng(7);
    const std::vector<VariableId> vars{VariableId::x(1, 0), VariableId::x(1, 1), VariableId::u(0, 1),
                                       VariableId::u(1, 0)};
    for (std::size_t n : {3u, 4u}) {
      for (int round = 0; round < 10; ++round) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m.at(i, j) = randomPolynomial(rng, vars, 2);
        CHECK(determinant(m) == oracle::leibnizDeterminant(m));
      }
    }
  }

  TEST_CASE("monomial order") {
    const MonomialOrder ord = xyOrder();
    const Monomial x(VariableId::x(1, 0)), y(VariableId::x(1, 1));
    CHECK(ord.compare(x * x, x * y) == std::strong_ordering::greater);
    CHECK(ord.compare(x * y, y * y) == std::strong_ordering::greater);
    CHECK(ord.compare(x, y * y) == std::strong_ordering::less);  // weight first
    CHECK_THROWS_AS(ord.rank(VariableId::u(0, 1)), UnknownVariableError);
    CHECK_THROWS_AS(MonomialOrder({{VariableId::x(1, 0), 0}}), DomainError);
  }

  TEST_CASE("groebner examples") {
    const MonomialOrder ord = xyOrder();
    const Polynomial x = poly("x1", xy()), y = poly("y1", xy());
    CHECK(buchberger({x}, ord).polynomials == std::vector<Polynomial>{x});

    const auto g2 = buchberger({x * x - 1, x * x * x - x}, ord);
    CHECK(g2.polynomials == std::vector<Polynomial>{x * x - 1});

    const auto g3 = buchberger({x * y - 1, y * y - 1}, ord);
    CHECK(std::find(g3.polynomials.begin(), g3.polynomials.end(), x - y) != g3.polynomials.end());
    CHECK(oracle::satisfiesBuchbergerCriterion(g3.polynomials, ord));

    CHECK(normalForm(Polynomial(1), buchberger({x}, ord)) == Polynomial(1));
  }

  TEST_CASE("groebner basis of the chain ideal") {
    const RootedTree T = test::chain(4);
    const Poset& P = T.poset();
    std::vector<std::pair<VariableId, std::int64_t>> w;
    for (const auto& v : xVariables(P)) w.emplace_back(v, 1);
    for (const auto& v : uVariables(T)) w.emplace_back(v, 1);
    const MonomialOrder ord(w);
    const std::vector<Polynomial> gens = lp::readPolynomialFixture(test::fixture("chain4.J.txt"), P);
    const GroebnerBasis G = buchberger(gens, ord);
    CHECK(oracle::satisfiesBuchbergerCriterion(G.polynomials, ord));
    for (const auto& g : gens) CHECK(normalForm(g, G).isZero());
    for (const auto& g : G.polynomials) CHECK(normalForm(g, G).isZero());
    CHECK(normalForm(poly("u[a,b]", P) * gens[0], G).isZero());
    // closure under multiplication by arbitrary polynomials
    CHECK(normalForm(poly("a1 + u[b,c]*d2 - 3", P) * gens[3], G).isZero());
    CHECK_FALSE(normalForm(poly("a1*a2", P), G).isZero());

    // reduced: leading monomials pairwise non-divisible, tails irreducible
    const auto lead = G.leadingMonomials();
    for (std::size_t i = 0; i < lead.size(); ++i)
      for (std::size_t j = 0; j < lead.size(); ++j)
        if (i != j) CHECK_FALSE(lead[i].divides(lead[j]));

    // order determinism under permuted input
    std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
    std::mt19937 rng(3);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(buchberger(shuffled, ord).polynomials == G.polynomials);
  }

  TEST_CASE("resource limits are reported") {
    const MonomialOrder ord = xyOrder();
    const Polynomial x = poly("x1", xy()), y = poly("y1", xy());
    GroebnerLimits tight;
    tight.maxSPairs = 0;
    CHECK_THROWS_AS(buchberger({x * y - 1, y * y - 1}, ord, tight), ResourceLimitError);
    GroebnerLimits low;
    low.maxWeight = 1;
    CHECK_THROWS_AS(buchberger({x * y - 1, y * y - x}, ord, low), ResourceLimitError);
  }

  TEST_CASE("rendering and parsing round trip") {
    const Poset P = test::star(2).poset();
    const Polynomial f = poly("a1*a2 - u[0,a]*b1*c1 + u[0,a]*u[c,b]*u[b,c]", P);
    CHECK(parsePolynomial(renderPolynomial(f, P), P) == f);
    CHECK(renderPolynomial(poly("-u[a,b]", P), P) == "-u[a,b]");
    CHECK(renderPolynomial(poly("2*a1^2 - 1/3*b2", P), P).find("2*a1^2") != std::string::npos);
    CHECK(renderPolynomial(Polynomial(), P) == "0");
    CHECK(poly("3/6*a1", P) == Polynomial(Monomial(VariableId::x(1, 0)), Rational(1, 2)));
    CHECK_THROWS_AS(poly("a3", P), ParseError);
    CHECK_THROWS_AS(poly("z1", P), ParseError);
    CHECK_THROWS_AS(poly("a1 +", P), ParseError);
    CHECK_THROWS_AS(poly("1/0*a1", P), ParseError);
    const auto j = polynomialToJson(poly("-2*u[a,b]*c1", P), P);
    CHECK(j.dump() == R"([{"coeff":"-2/1","monomial":{"c1":1,"u[a,b]":1}}])");
  }
}
