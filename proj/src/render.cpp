#include "lp/render.hpp"

#include <algorithm>
#include <cctype>

namespace lp {

std::string renderVariable(const VariableId& v, const Poset& poset) {
  if (v.isX()) return poset.name(v.element()) + std::to_string(v.place);
  const std::string upper = v.upper() == kNoElement ? "0" : poset.name(v.upper());
  return "u[" + upper + "," + poset.name(v.lower()) + "]";
}

std::string renderMonomial(const Monomial& m, const Poset& poset, const MonomialOrder* order) {
  auto factors = m.factors();
  if (order) {
    std::sort(factors.begin(), factors.end(), [order](const auto& a, const auto& b) {
      return order->rank(a.first) < order->rank(b.first);
    });
  }
  std::string out;
  for (const auto& [v, e] : factors) {
    if (!out.empty()) out += '*';
    out += renderVariable(v, poset);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::vector<std::pair<Monomial, Rational>> orderedTerms(const Polynomial& f, const MonomialOrder* order) {
  if (order) return order->sortedTerms(f);
  // Without an order, list the larger structural monomials first.
  return {f.terms().rbegin(), f.terms().rend()};
}

}  // namespace

std::string renderPolynomial(const Polynomial& f, const Poset& poset, const MonomialOrder* order) {
  if (f.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : orderedTerms(f, order)) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.isOne()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += renderMonomial(m, poset, order);
    } else {
      out += magnitude.get_str() + "*" + renderMonomial(m, poset, order);
    }
  }
  return out;
}

nlohmann::ordered_json polynomialToJson(const Polynomial& f, const Poset& poset,
                                        const MonomialOrder* order) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : orderedTerms(f, order)) {
    auto factors = m.factors();
    if (order)
      std::sort(factors.begin(), factors.end(), [order](const auto& a, const auto& b) {
        return order->rank(a.first) < order->rank(b.first);
      });
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [v, e] : factors) mono[renderVariable(v, poset)] = e;
    terms.push_back({{"coeff", c.get_num().get_str() + "/" + c.get_den().get_str()},
                     {"monomial", std::move(mono)}});
  }
  return terms;
}

namespace {

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, const Poset& poset) : text_(text), poset_(poset) {}

  Polynomial parse() {
    Polynomial result;
    skipSpace();
    if (atEnd()) fail("empty polynomial");
    bool firstTerm = true;
    while (!atEnd()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skipSpace();
      } else if (!firstTerm) {
        fail("expected '+' or '-'");
      }
      firstTerm = false;
      Polynomial term = parseTerm();
      if (sign < 0) term = -term;
      result += term;
      skipSpace();
    }
    return result;
  }

private:
  Polynomial parseTerm() {
    Rational coeff = 1;
    std::vector<Monomial::Factor> factors;
    while (true) {
      skipSpace();
      if (atEnd()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parseRational();
      } else {
        const VariableId v = parseVariable();
        std::uint32_t exponent = 1;
        skipSpace();
        if (!atEnd() && peek() == '^') {
          ++pos_;
          skipSpace();
          exponent = static_cast<std::uint32_t>(std::stoul(parseDigits()));
        }
        factors.emplace_back(v, exponent);
      }
      skipSpace();
      if (!atEnd() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial(Monomial::fromFactors(std::move(factors)), coeff);
  }

  Rational parseRational() {
    std::string num = parseDigits();
    if (!atEnd() && peek() == '/') {
      ++pos_;
      const std::string den = parseDigits();
      if (mpz_class(den) == 0) fail("zero denominator");
      Rational r(num + "/" + den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  std::string parseDigits() {
    const auto start = pos_;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string parseName() {
    const auto start = pos_;
    if (atEnd() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a name");
    while (!atEnd() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  VariableId parseVariable() {
    if (text_.substr(pos_, 2) == "u[") {
      pos_ += 2;
      skipSpace();
      Element upper = kNoElement;
      if (!atEnd() && peek() == '0') {
        ++pos_;
      } else {
        upper = poset_.index(parseName());
      }
      skipSpace();
      expect(',');
      skipSpace();
      const Element lower = poset_.index(parseName());
      skipSpace();
      expect(']');
      return VariableId::u(upper, lower);
    }
    const std::string token = parseName();
    const char place = token.back();
    if (token.size() < 2 || (place != '1' && place != '2'))
      fail("variable '" + token + "' must end in place 1 or 2");
    return VariableId::x(place - '0', poset_.index(token.substr(0, token.size() - 1)));
  }

  void expect(char c) {
    if (atEnd() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  const Poset& poset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const Poset& poset) {
  return PolynomialParser(text, poset).parse();
}

}  // namespace lp
