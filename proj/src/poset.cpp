#include "lp/poset.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <queue>
#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool validName(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Poset Poset::fromRelations(std::vector<std::string> names,
                           const std::vector<std::pair<Element, Element>>& relations) {
  Poset p;
  p.names_ = std::move(names);
  const std::size_t n = p.names_.size();
  {
    std::set<std::string_view> seen;
    for (const auto& name : p.names_) {
      if (!seen.insert(name).second) throw ParseError("duplicate element name '" + name + "'");
    }
  }
  p.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
  for (const auto& [a, b] : relations) {
    if (a < 0 || b < 0 || idx(a) >= n || idx(b) >= n) throw IndexError("relation references unknown element");
    if (a == b) throw CycleError("relation " + p.names_[idx(a)] + " < " + p.names_[idx(a)]);
    p.leq_[idx(a) * n + idx(b)] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw CycleError("relations imply " + p.names_[i] + " < " + p.names_[i] + " (via " +
                         p.names_[j] + ")");

  // Kahn's algorithm with name tie-break.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq_[i * n + j]) ++indegree[j];
  auto byName = [&](Element a, Element b) { return p.names_[idx(a)] > p.names_[idx(b)]; };
  std::priority_queue<Element, std::vector<Element>, decltype(byName)> ready(byName);
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(static_cast<Element>(i));
  while (!ready.empty()) {
    const Element e = ready.top();
    ready.pop();
    p.linearExtension_.push_back(e);
    for (std::size_t j = 0; j < n; ++j)
      if (j != idx(e) && p.leq_[idx(e) * n + j] && --indegree[j] == 0)
        ready.push(static_cast<Element>(j));
  }
  p.position_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) p.position_[idx(p.linearExtension_[i])] = i;

  // Transitive reduction.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq_[i * n + j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && p.leq_[i * n + k] && p.leq_[k * n + j]) cover = false;
      if (cover) p.covers_.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end(), [&](const auto& x, const auto& y) {
    return std::pair(p.position(x.first), p.position(x.second)) <
           std::pair(p.position(y.first), p.position(y.second));
  });
  return p;
}

std::optional<Element> Poset::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

Element Poset::index(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw ParseError("unknown element '" + std::string(name) + "'");
}

bool Poset::covers(Element p, Element q) const {
  return std::find(covers_.begin(), covers_.end(), std::pair(p, q)) != covers_.end();
}

std::vector<Element> Poset::upperCovers(Element p) const {
  std::vector<Element> out;
  for (const auto& [a, b] : covers_)
    if (a == p) out.push_back(b);
  sortByPosition(out);
  return out;
}

std::vector<Element> Poset::lowerCovers(Element p) const {
  std::vector<Element> out;
  for (const auto& [a, b] : covers_)
    if (b == p) out.push_back(a);
  sortByPosition(out);
  return out;
}

std::vector<Element> Poset::strictIdealBelow(Element p) const {
  std::vector<Element> out;
  for (Element r : linearExtension_)
    if (lt(r, p)) out.push_back(r);
  return out;
}

std::vector<Element> Poset::strictFilterAbove(Element p) const {
  std::vector<Element> out;
  for (Element q : linearExtension_)
    if (lt(p, q)) out.push_back(q);
  return out;
}

std::vector<Element> Poset::minimalElements() const {
  std::vector<Element> out;
  for (Element e : linearExtension_)
    if (lowerCovers(e).empty()) out.push_back(e);
  return out;
}

std::vector<Element> Poset::maximalElements() const {
  std::vector<Element> out;
  for (Element e : linearExtension_)
    if (upperCovers(e).empty()) out.push_back(e);
  return out;
}

std::vector<std::pair<Element, Element>> Poset::comparablePairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element p : linearExtension_)
    for (Element q : linearExtension_)
      if (leq(p, q)) out.emplace_back(p, q);
  return out;
}

void Poset::sortByPosition(std::vector<Element>& elements) const {
  std::sort(elements.begin(), elements.end(),
            [this](Element a, Element b) { return position(a) < position(b); });
}

Poset parsePoset(std::string_view text) {
  static const std::regex coverLine(R"(^([A-Za-z][A-Za-z0-9]*)\s*<\s*([A-Za-z][A-Za-z0-9]*)$)");
  static const std::regex elemLine(R"(^elem\s+([A-Za-z][A-Za-z0-9]*)$)");

  std::vector<std::string> names;
  std::map<std::string, Element, std::less<>> ids;
  std::vector<std::pair<Element, Element>> relations;
  auto intern = [&](const std::string& name) {
    if (auto it = ids.find(name); it != ids.end()) return it->second;
    const auto e = static_cast<Element>(names.size());
    names.push_back(name);
    ids.emplace(name, e);
    return e;
  };

  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineNo;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    start = end + 1;
    if (line.empty()) continue;

    const std::string s(line);
    std::smatch m;
    if (std::regex_match(s, m, coverLine)) {
      const Element a = intern(m[1].str());
      const Element b = intern(m[2].str());
      if (a == b) throw CycleError("line " + std::to_string(lineNo) + ": " + s + " declares p < p");
      relations.emplace_back(a, b);
    } else if (std::regex_match(s, m, elemLine)) {
      if (!validName(m[1].str())) throw ParseError("line " + std::to_string(lineNo) + ": bad name");
      intern(m[1].str());
    } else {
      throw ParseError("line " + std::to_string(lineNo) + ": cannot parse '" + s + "'");
    }
  }
  if (names.empty()) throw ParseError("poset has no elements");
  return Poset::fromRelations(std::move(names), relations);
}

Poset readPosetFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open poset file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parsePoset(buffer.str());
}

std::uint64_t countOrderIdeals(const Poset& poset) {
  const std::size_t n = poset.size();
  if (n > 20) throw SizeLimitError("countOrderIdeals: |P| = " + std::to_string(n) + " exceeds 20");
  // below[i]: bitmask of elements strictly below i.
  std::vector<std::uint32_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.lt(static_cast<Element>(j), static_cast<Element>(i))) below[i] |= 1u << j;
  std::uint64_t count = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if ((subset >> i & 1u) && (below[i] & ~subset)) closed = false;
    if (closed) ++count;
  }
  return count;
}

std::string posetToJson(const Poset& poset) {
  nlohmann::ordered_json j;
  j["elements"] = poset.names();
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [p, q] : poset.covers()) covers.push_back({poset.name(p), poset.name(q)});
  j["covers"] = covers;
  try {
    const auto tree = asRootedTree(poset);
    j["root"] = poset.name(tree.root());
  } catch (const NotATreeError&) {
    j["root"] = nullptr;
  }
  return j.dump();
}

std::optional<Element> RootedTree::parent(Element e) const {
  return parent_.at(static_cast<std::size_t>(e));
}

std::vector<Element> RootedTree::siblings(Element e) const {
  std::vector<Element> out;
  const auto p = parent(e);
  if (!p) return out;
  for (Element c : children(*p))
    if (c != e) out.push_back(c);
  return out;
}

bool RootedTree::isSibling(Element b, Element c) const {
  return b != c && parent(b) && parent(b) == parent(c);
}

Element RootedTree::meet(Element p, Element q) const {
  Element r = p;
  while (!poset_.leq(r, q)) r = *parent(r);
  return r;
}

std::vector<Element> RootedTree::chain(Element a, Element b) const {
  if (!poset_.leq(a, b))
    throw NotComparableError(poset_.name(a) + " is not below " + poset_.name(b));
  std::vector<Element> out{b};
  while (out.back() != a) out.push_back(*parent(out.back()));
  std::reverse(out.begin(), out.end());
  return out;
}

RootedTree asRootedTree(const Poset& poset) {
  const auto minimal = poset.minimalElements();
  if (minimal.size() != 1)
    throw NotATreeError("poset has " + std::to_string(minimal.size()) + " minimal elements",
                        poset.name(minimal.at(1)));
  RootedTree t;
  t.poset_ = poset;
  t.root_ = minimal.front();
  const std::size_t n = poset.size();
  t.parent_.assign(n, std::nullopt);
  t.children_.assign(n, {});
  for (Element e : poset.linearExtension()) {
    const auto lower = poset.lowerCovers(e);
    if (lower.size() > 1)
      throw NotATreeError("element " + poset.name(e) + " has " + std::to_string(lower.size()) +
                              " parents",
                          poset.name(e));
    if (!lower.empty()) {
      t.parent_[static_cast<std::size_t>(e)] = lower.front();
      t.children_[static_cast<std::size_t>(lower.front())].push_back(e);
    }
  }
  t.depth_.assign(n, 0);
  const auto& order = poset.linearExtension();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (Element c : t.children_[static_cast<std::size_t>(*it)])
      t.depth_[static_cast<std::size_t>(*it)] =
          std::max(t.depth_[static_cast<std::size_t>(*it)], t.depth_[static_cast<std::size_t>(c)] + 1);
  return t;
}

std::vector<RootedTree> enumerateRootedTrees(std::size_t n) {
  if (n == 0) return {};
  if (n > 26) throw SizeLimitError("enumerateRootedTrees: n > 26");

  std::vector<std::size_t> parent(n, 0);
  std::map<std::string, std::vector<std::size_t>> byShape;

  std::function<std::string(const std::vector<std::vector<std::size_t>>&, std::size_t)> canon =
      [&](const std::vector<std::vector<std::size_t>>& kids, std::size_t v) {
        std::vector<std::string> parts;
        for (std::size_t c : kids[v]) parts.push_back(canon(kids, c));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& part : parts) s += part;
        return s + ")";
      };

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> kids(n);
      for (std::size_t v = 1; v < n; ++v) kids[parent[v]].push_back(v);
      byShape.try_emplace(canon(kids, 0), parent);
      return;
    }
    for (std::size_t p = 0; p < i; ++p) {
      parent[i] = p;
      assign(i + 1);
    }
  };
  assign(1);

  std::vector<RootedTree> out;
  for (const auto& [shape, parents] : byShape) {
    std::vector<std::vector<std::size_t>> kids(n);
    for (std::size_t v = 1; v < n; ++v) kids[parents[v]].push_back(v);
    for (auto& k : kids)
      std::sort(k.begin(), k.end(), [&](std::size_t x, std::size_t y) {
        return canon(kids, x) < canon(kids, y);
      });
    // Rename breadth-first so that names follow a linear extension.
    std::vector<std::size_t> bfs{0};
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t c : kids[bfs[i]]) bfs.push_back(c);
    std::vector<Element> rename(n);
    for (std::size_t i = 0; i < n; ++i) rename[bfs[i]] = static_cast<Element>(i);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::pair<Element, Element>> rel;
    for (std::size_t v = 1; v < n; ++v) rel.emplace_back(rename[parents[v]], rename[v]);
    out.push_back(asRootedTree(Poset::fromRelations(std::move(names), rel)));
  }
  return out;
}

}  // namespace lp
