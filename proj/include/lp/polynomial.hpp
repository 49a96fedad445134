#ifndef LP_POLYNOMIAL_HPP
#define LP_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lp/poset.hpp"

namespace lp {

using Rational = mpq_class;

/// Marks the empty upper index of the root variable u_{0,rho}.
inline constexpr Element kNoElement = -1;

/// A variable of B(2,P): either x_{i,p} (written p_i) or u_{q,p}.
struct VariableId {
  enum class Kind : std::uint8_t { X = 0, U = 1 };

  Kind kind = Kind::X;
  std::int8_t place = 0;     // 1 or 2 for X, 0 for U
  Element first = 0;         // X: element; U: upper index q (kNoElement for the root variable)
  Element second = 0;        // X: unused (0); U: lower index p

  static constexpr VariableId x(int place, Element element) {
    return {Kind::X, static_cast<std::int8_t>(place), element, 0};
  }
  static constexpr VariableId u(Element upper, Element lower) { return {Kind::U, 0, upper, lower}; }

  bool isX() const { return kind == Kind::X; }
  bool isU() const { return kind == Kind::U; }
  Element element() const { return first; }
  Element upper() const { return first; }
  Element lower() const { return second; }

  friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

/// Sparse power product; exponents are positive, variables strictly increasing.
class Monomial {
public:
  using Factor = std::pair<VariableId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VariableId v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial fromFactors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool isOne() const { return factors_.empty(); }
  std::uint32_t exponent(const VariableId& v) const;
  std::uint64_t totalDegree() const;
  /// Sum of exponents of u-variables.
  std::uint64_t uDegree() const;
  bool hasX() const;

  bool divides(const Monomial& other) const;
  /// other / *this; precondition divides(other).
  Monomial quotientOf(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Factor> factors_;
};

/// Canonical sparse polynomial with exact rational coefficients.  Zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT
  explicit Polynomial(const Monomial& m, const Rational& coefficient = 1);
  static Polynomial variable(VariableId v) { return Polynomial(Monomial(v)); }
  static Polynomial fromTerms(const std::vector<std::pair<Monomial, Rational>>& terms);

  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void addTerm(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Multiplies every term by a monomial.
  Polynomial shifted(const Monomial& m) const;

  /// Evaluation homomorphism; variables absent from `assignment` stay fixed.
  Polynomial substitute(const std::map<VariableId, Polynomial>& assignment) const;
  /// Replaces every u-variable by zero.
  Polynomial specializeU() const;

  std::vector<VariableId> variables() const;
  /// True iff every monomial has positive total u-degree.
  bool everyTermHasU() const;

private:
  TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Rational& c);
Polynomial substitute(const Polynomial& f, const std::map<VariableId, Polynomial>& assignment);

/// Convenience constructors for the letterplace variables.
inline Polynomial xVar(int place, Element p) { return Polynomial::variable(VariableId::x(place, p)); }
inline Polynomial uVar(Element q, Element p) { return Polynomial::variable(VariableId::u(q, p)); }

}  // namespace lp

#endif  // LP_POLYNOMIAL_HPP
