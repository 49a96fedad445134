#include "lp/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lp/render.hpp"

namespace lp {

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename F>
void forEachLine(std::string_view text, F&& f) {
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineNo;
    std::string line = trim(text.substr(pos, nl - pos));
    if (!line.empty() && line[0] != '#') f(line, lineNo);
    pos = nl + 1;
  }
}

bool contains(const std::vector<Polynomial>& v, const Polynomial& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

}  // namespace

std::vector<Polynomial> parsePolynomialFixture(std::string_view text, const Poset& poset) {
  std::vector<Polynomial> out;
  forEachLine(text, [&](const std::string& line, std::size_t lineNo) {
    try {
      out.push_back(parsePolynomial(line, poset));
    } catch (const ParseError& e) {
      throw ParseError("fixture line " + std::to_string(lineNo) + ": " + e.what());
    }
  });
  return out;
}

std::vector<Polynomial> readPolynomialFixture(const std::string& path, const Poset& poset) {
  return parsePolynomialFixture(readFile(path), poset);
}

FixtureDiff compareFixture(const std::vector<Polynomial>& computed, const std::vector<Polynomial>& expected) {
  FixtureDiff diff;
  std::vector<Polynomial> missing, extra;
  for (const auto& f : expected)
    if (!contains(computed, f)) missing.push_back(f);
  for (const auto& f : computed)
    if (!contains(expected, f)) extra.push_back(f);

  for (const auto& m : missing) {
    auto it = std::find_if(extra.begin(), extra.end(), [&](const Polynomial& e) {
      return !m.specializeU().isZero() && e.specializeU() == m.specializeU();
    });
    if (it != extra.end()) {
      diff.mismatched.emplace_back(m, *it);
      extra.erase(it);
    } else {
      diff.missing.push_back(m);
    }
  }
  diff.extra = std::move(extra);
  return diff;
}

std::string renderDiff(const FixtureDiff& diff, const Poset& poset, const MonomialOrder* order) {
  std::string out;
  for (const auto& f : diff.missing) out += "- " + renderPolynomial(f, poset, order) + "\n";
  for (const auto& f : diff.extra) out += "+ " + renderPolynomial(f, poset, order) + "\n";
  for (const auto& [want, got] : diff.mismatched)
    out += "~ " + renderPolynomial(want, poset, order) + " | " + renderPolynomial(got, poset, order) + "\n";
  return out;
}

T1Fixture parseT1Fixture(std::string_view text) {
  T1Fixture fx;
  forEachLine(text, [&](const std::string& line, std::size_t lineNo) {
    if (line.rfind("count", 0) == 0) {
      try {
        fx.count = static_cast<std::size_t>(std::stoul(trim(line.substr(5))));
      } catch (const std::exception&) {
        throw ParseError("fixture line " + std::to_string(lineNo) + ": bad count");
      }
    } else if (line[0] == '?') {
      fx.flagged.push_back(trim(line.substr(1)));
    } else if (line.find("->") != std::string::npos) {
      fx.exact.push_back(line);
    } else {
      throw ParseError("fixture line " + std::to_string(lineNo) + ": expected a map `p1*p2 -> m`");
    }
  });
  return fx;
}

T1Fixture readT1Fixture(const std::string& path) { return parseT1Fixture(readFile(path)); }

namespace {

std::pair<Monomial, Monomial> parseMap(const std::string& line, const Poset& poset) {
  const auto arrow = line.find("->");
  if (arrow == std::string::npos) throw ParseError("expected `p1*p2 -> m` in '" + line + "'");
  const auto side = [&](std::string_view s) {
    const Polynomial f = parsePolynomial(s, poset);
    if (f.termCount() != 1 || f.terms().begin()->second != 1) throw ParseError("'" + line + "' is not a map of monomials");
    return f.terms().begin()->first;
  };
  return {side(std::string_view(line).substr(0, arrow)), side(std::string_view(line).substr(arrow + 2))};
}

}  // namespace

T1Comparison compareT1Fixture(const std::vector<T1Generator>& computed, const T1Fixture& fixture,
                              const Poset& poset) {
  std::vector<std::pair<Monomial, Monomial>> have;
  for (const auto& g : computed) {
    const Monomial source = Monomial(VariableId::x(1, g.source)) * Monomial(VariableId::x(2, g.source));
    have.emplace_back(source, g.image);
  }
  const auto has = [&](const std::string& line) {
    return std::find(have.begin(), have.end(), parseMap(line, poset)) != have.end();
  };
  T1Comparison cmp;
  for (const auto& e : fixture.exact)
    if (!has(e)) cmp.missing.push_back(e);
  for (const auto& e : fixture.flagged)
    if (!has(e)) cmp.flaggedAbsent.push_back(e);
  if (!cmp.missing.empty()) {
    cmp.pass = false;
    cmp.detail = std::to_string(cmp.missing.size()) + " expected map(s) not computed";
  }
  if (fixture.count && *fixture.count != computed.size()) {
    cmp.pass = false;
    cmp.detail += (cmp.detail.empty() ? "" : "; ") + std::string("expected ") +
                  std::to_string(*fixture.count) + " maps, computed " + std::to_string(computed.size());
  }
  return cmp;
}

}  // namespace lp
