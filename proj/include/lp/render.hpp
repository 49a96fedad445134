#ifndef LP_RENDER_HPP
#define LP_RENDER_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lp/groebner.hpp"
#include "lp/polynomial.hpp"
#include "lp/poset.hpp"

namespace lp {

// Text format: variables `a1`, `a2`, `u[a,b]`, `u[0,a]`; factors joined by
// `*`, powers as `^k`; terms joined by ` + ` / ` - `.

std::string renderVariable(const VariableId& v, const Poset& poset);

/// Variables inside a monomial follow `order` when given, else structural order.
std::string renderMonomial(const Monomial& m, const Poset& poset, const MonomialOrder* order = nullptr);

/// Terms are listed from the largest monomial down when `order` is given.
std::string renderPolynomial(const Polynomial& f, const Poset& poset,
                             const MonomialOrder* order = nullptr);

/// `[{"coeff": "num/den", "monomial": {"a1": 1, ...}}, ...]`
nlohmann::ordered_json polynomialToJson(const Polynomial& f, const Poset& poset,
                                        const MonomialOrder* order = nullptr);

/// Inverse of renderPolynomial; also accepts integer/rational coefficients
/// anywhere in a product.  Throws ParseError.
Polynomial parsePolynomial(std::string_view text, const Poset& poset);

}  // namespace lp

#endif  // LP_RENDER_HPP
