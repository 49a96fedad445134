#include "lp/letterplace.hpp"

namespace lp {

std::vector<Polynomial> LetterplaceIdeal::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& m : generators) out.emplace_back(m);
  return out;
}

LetterplaceIdeal letterplaceGenerators(const Poset& poset) {
  LetterplaceIdeal ideal;
  ideal.pairs = poset.comparablePairs();
  for (const auto& [p, q] : ideal.pairs)
    ideal.generators.push_back(Monomial(VariableId::x(1, p)) * Monomial(VariableId::x(2, q)));
  return ideal;
}

std::vector<VariableId> uVariables(const RootedTree& tree) {
  const Poset& poset = tree.poset();
  std::vector<VariableId> out{VariableId::u(kNoElement, tree.root())};
  for (Element p : poset.linearExtension()) {
    const auto parent = tree.parent(p);
    if (!parent) continue;
    for (Element q : poset.linearExtension())
      if (q != p && tree.meet(q, p) == *parent) out.push_back(VariableId::u(q, p));
  }
  return out;
}

std::vector<VariableId> xVariables(const Poset& poset) {
  std::vector<VariableId> out;
  for (Element p : poset.linearExtension()) {
    out.push_back(VariableId::x(1, p));
    out.push_back(VariableId::x(2, p));
  }
  return out;
}

}  // namespace lp
