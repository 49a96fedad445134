#include "lp/deformation.hpp"

#include <algorithm>

#include "lp/letterplace.hpp"

namespace lp {

namespace {

int inversionParity(const std::vector<std::size_t>& seq) {
  int parity = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) parity ^= 1;
  return parity;
}

bool hasDuplicates(std::vector<std::size_t> seq) {
  std::sort(seq.begin(), seq.end());
  return std::adjacent_find(seq.begin(), seq.end()) != seq.end();
}

}  // namespace

DeformationContext::DeformationContext(RootedTree tree) : tree_(std::move(tree)) {}

void DeformationContext::requireLeq(Element a, Element b) const {
  if (!poset().leq(a, b))
    throw NotComparableError(poset().name(a) + " is not below " + poset().name(b));
}

Polynomial DeformationContext::tSub(Element c, Element b) const {
  const auto parent = tree_.parent(b);
  if (parent && c == *parent) return -(xVar(2, c) * uVar(c, b));
  if (!tree_.isSibling(c, b))
    throw RelationError(poset().name(c) + " is neither the parent nor a sibling of " +
                        poset().name(b));
  Polynomial sum;
  for (Element q : poset().linearExtension())
    if (poset().leq(c, q)) sum += xVar(2, q) * uVar(q, b);
  return -sum;
}

Polynomial DeformationContext::tFull(Element b) const {
  if (auto it = tMemo_.find(b); it != tMemo_.end()) return it->second;
  Polynomial t;
  if (b == tree_.root()) {
    t = uVar(kNoElement, b);
  } else {
    t = -tSub(*tree_.parent(b), b);
    for (Element c : tree_.siblings(b)) t -= tSub(c, b);
  }
  return tMemo_.emplace(b, std::move(t)).first->second;
}

Polynomial DeformationContext::tForm(Element c, Element b) const {
  return c == b ? tFull(b) : tSub(c, b);
}

Polynomial DeformationContext::stEntry(Element x, Element b) const {
  if (x == b) return xVar(1, b);
  const auto parent = tree_.parent(b);
  if (parent && x == *parent) return -uVar(x, b);
  if (!tree_.isSibling(x, b))
    throw RelationError(poset().name(x) + " is neither " + poset().name(b) +
                        ", its parent, nor a sibling");
  return sOpLinear(x, tSub(x, b));
}

std::size_t DeformationContext::columnIndex(Element a, Element x) const {
  if (x == a) return 0;
  const auto& kids = tree_.children(a);
  auto it = std::find(kids.begin(), kids.end(), x);
  if (it == kids.end())
    throw IndexError(poset().name(x) + " is not a child of " + poset().name(a));
  return static_cast<std::size_t>(it - kids.begin()) + 1;
}

PolyMatrix DeformationContext::matrixM(Element a) const {
  const auto& kids = tree_.children(a);
  if (kids.empty()) throw LeafError(poset().name(a) + " is maximal; M(a) is undefined");
  const std::size_t m = kids.size();
  PolyMatrix out(m, m + 1);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i <= m; ++i)
      out.at(j, i) = stEntry(i == 0 ? a : kids[i - 1], kids[j]);
  return out;
}

Polynomial DeformationContext::minorD(Element a, std::size_t column) const {
  const std::size_t m = tree_.children(a).size();
  if (column > m)
    throw IndexError("D(" + poset().name(a) + ")^" + std::to_string(column) + ": index out of range");
  if (m == 0) return Polynomial(1);
  if (auto it = minorMemo_.find({a, column}); it != minorMemo_.end()) return it->second;
  Polynomial d = determinant(matrixM(a).without({}, {column}));
  if (column % 2 == 1) d = -d;
  return minorMemo_.emplace(std::pair(a, column), std::move(d)).first->second;
}

Polynomial DeformationContext::minorDOf(Element a, Element x) const {
  return minorD(a, columnIndex(a, x));
}

Polynomial DeformationContext::generalizedMinor(Element a, const std::vector<std::size_t>& cols,
                                                const std::vector<std::size_t>& rows) const {
  const std::size_t m = tree_.children(a).size();
  for (auto c : cols)
    if (c > m) throw IndexError("column index out of range");
  for (auto r : rows)
    if (r < 1 || r > m) throw IndexError("row index out of range");
  if (hasDuplicates(cols) || hasDuplicates(rows)) throw IndexError("repeated index");
  if (cols.size() != rows.size() + 1)
    throw ShapeError("generalizedMinor needs exactly one more column than row deleted");
  if (m == 0) return Polynomial(1);

  std::vector<std::size_t> dropRows;
  for (auto r : rows) dropRows.push_back(r - 1);
  Polynomial d = determinant(matrixM(a).without(dropRows, cols));
  std::size_t exponent = 0;
  for (auto c : cols) exponent += c;
  for (auto r : rows) exponent += r;
  exponent += static_cast<std::size_t>(inversionParity(cols) + inversionParity(rows));
  if (exponent % 2 == 1) d = -d;
  return d;
}

Polynomial DeformationContext::coverProductR(Element a, Element b) const {
  requireLeq(a, b);
  if (auto it = rMemo_.find({a, b}); it != rMemo_.end()) return it->second;
  const auto chain = tree_.chain(a, b);
  Polynomial r(1);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) r = r * minorDOf(chain[i], chain[i + 1]);
  return rMemo_.emplace(std::pair(a, b), std::move(r)).first->second;
}

Polynomial DeformationContext::sOp(Element a, Element b) const {
  requireLeq(a, b);
  if (auto it = sMemo_.find({a, b}); it != sMemo_.end()) return it->second;
  Polynomial s = coverProductR(a, b) * minorD(b, 0);
  return sMemo_.emplace(std::pair(a, b), std::move(s)).first->second;
}

Polynomial DeformationContext::sOpLinear(Element a, const Polynomial& f) const {
  Polynomial out;
  for (const auto& [mono, c] : f.terms()) {
    std::optional<Element> q;
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : mono.factors()) {
      if (v.isU()) {
        rest.emplace_back(v, e);
        continue;
      }
      if (q || v.place != 2 || e != 1)
        throw DomainError("S_" + poset().name(a) + " applied to a term that is not linear in place-2 variables");
      q = v.element();
    }
    if (!q) throw DomainError("S_" + poset().name(a) + " applied to a term without a place-2 variable");
    if (!poset().leq(a, *q))
      throw DomainError("S_" + poset().name(a) + " applied to " + poset().name(*q) + "2, which is not above it");
    out += (sOp(a, *q) * c).shifted(Monomial::fromFactors(std::move(rest)));
  }
  return out;
}

Polynomial DeformationContext::deformedGenerator(Element p, Element q) const {
  requireLeq(p, q);
  return xVar(1, p) * xVar(2, q) - tFull(p) * sOp(p, q);
}

DeformedIdeal DeformationContext::jIdealGenerators() const {
  DeformedIdeal ideal;
  ideal.pairs = poset().comparablePairs();
  for (const auto& [p, q] : ideal.pairs) ideal.generators.push_back(deformedGenerator(p, q));
  return ideal;
}

void DeformationContext::clearMemo() const {
  minorMemo_.clear();
  sMemo_.clear();
  rMemo_.clear();
  tMemo_.clear();
}

}  // namespace lp
