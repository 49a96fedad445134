#include "lp/polynomial.hpp"

#include <algorithm>

namespace lp {

Monomial::Monomial(VariableId v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::fromFactors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  return m;
}

std::uint32_t Monomial::exponent(const VariableId& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VariableId& x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::uint64_t Monomial::totalDegree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint64_t Monomial::uDegree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_)
    if (f.first.isU()) d += f.second;
  return d;
}

bool Monomial::hasX() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.isX(); });
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotientOf(const Monomial& other) const {
  Monomial q;
  auto it = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (it != factors_.end() && it->first < v) ++it;
    const std::uint32_t mine = (it != factors_.end() && it->first == v) ? it->second : 0;
    if (e > mine) q.factors_.emplace_back(v, e - mine);
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  while (x != a.factors_.end() || y != b.factors_.end()) {
    if (y == b.factors_.end() || (x != a.factors_.end() && x->first < y->first)) {
      out.factors_.push_back(*x++);
    } else if (x == a.factors_.end() || y->first < x->first) {
      out.factors_.push_back(*y++);
    } else {
      out.factors_.emplace_back(x->first, x->second + y->second);
      ++x;
      ++y;
    }
  }
  return out;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

Polynomial Polynomial::fromTerms(const std::vector<std::pair<Monomial, Rational>>& terms) {
  Polynomial p;
  for (const auto& [m, c] : terms) p.addTerm(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) addTerm(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.addTerm(ma * mb, Rational(ca * cb));
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono * m, c);
  return out;
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& assignment) const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) {
    Polynomial term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : mono.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      for (std::uint32_t k = 0; k < e; ++k) term = term * it->second;
      if (term.isZero()) break;
    }
    if (term.isZero()) continue;
    out += term.shifted(Monomial::fromFactors(std::move(kept)));
  }
  return out;
}

Polynomial Polynomial::specializeU() const {
  Polynomial out;
  for (const auto& [mono, c] : terms_)
    if (mono.uDegree() == 0) out.terms_.emplace(mono, c);
  return out;
}

std::vector<VariableId> Polynomial::variables() const {
  std::vector<VariableId> out;
  for (const auto& [mono, c] : terms_)
    for (const auto& [v, e] : mono.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Polynomial::everyTermHasU() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.uDegree() > 0; });
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial scale(const Polynomial& f, const Rational& c) { return f * c; }
Polynomial substitute(const Polynomial& f, const std::map<VariableId, Polynomial>& assignment) {
  return f.substitute(assignment);
}

}  // namespace lp
