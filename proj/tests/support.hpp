#pragma once

#include <string>
#include <string_view>

#include "lp/poset.hpp"
#include "lp/render.hpp"

#ifndef LP_FIXTURE_DIR
#define LP_FIXTURE_DIR "fixtures"
#endif

namespace lp::test {

inline std::string fixture(const std::string& name) { return std::string(LP_FIXTURE_DIR) + "/" + name; }

inline RootedTree treeOf(std::string_view text) { return asRootedTree(parsePoset(text)); }

inline RootedTree chain(std::size_t n) {
  std::string text = n == 1 ? "elem a\n" : "";
  for (std::size_t i = 0; i + 1 < n; ++i)
    text += std::string(1, char('a' + i)) + " < " + std::string(1, char('a' + i + 1)) + "\n";
  return treeOf(text);
}

inline RootedTree star(std::size_t children) {
  std::string text = children == 0 ? "elem a\n" : "";
  for (std::size_t i = 0; i < children; ++i) text += "a < " + std::string(1, char('b' + i)) + "\n";
  return treeOf(text);
}

inline Polynomial poly(std::string_view text, const Poset& poset) { return parsePolynomial(text, poset); }

inline Element el(const Poset& poset, std::string_view name) { return poset.index(name); }

}  // namespace lp::test
