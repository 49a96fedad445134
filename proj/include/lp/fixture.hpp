#ifndef LP_FIXTURE_HPP
#define LP_FIXTURE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lp/cotangent.hpp"
#include "lp/groebner.hpp"
#include "lp/polynomial.hpp"
#include "lp/poset.hpp"

namespace lp {

// Polynomial fixtures hold one polynomial per line in the canonical text
// rendering; blank lines and `#` comments are ignored.
std::vector<Polynomial> parsePolynomialFixture(std::string_view text, const Poset& poset);
std::vector<Polynomial> readPolynomialFixture(const std::string& path, const Poset& poset);

/// Set difference between computed and expected polynomials.  Entries whose
/// u-free part agrees are paired up as mismatches instead of being listed as
/// one missing plus one extra.
struct FixtureDiff {
  std::vector<Polynomial> missing;  // expected, not computed
  std::vector<Polynomial> extra;    // computed, not expected
  std::vector<std::pair<Polynomial, Polynomial>> mismatched;  // (expected, computed)
  bool empty() const { return missing.empty() && extra.empty() && mismatched.empty(); }
};

FixtureDiff compareFixture(const std::vector<Polynomial>& computed, const std::vector<Polynomial>& expected);
/// One line per entry: `- <missing>`, `+ <extra>`, `~ <expected> | <computed>`.
std::string renderDiff(const FixtureDiff& diff, const Poset& poset, const MonomialOrder* order = nullptr);

// T^1 fixtures: an optional `count N` line, exact lines `p1*p2 -> image`,
// and `? p1*p2 -> image` lines kept for manual comparison only.
struct T1Fixture {
  std::optional<std::size_t> count;
  std::vector<std::string> exact;
  std::vector<std::string> flagged;
};
T1Fixture parseT1Fixture(std::string_view text);
T1Fixture readT1Fixture(const std::string& path);

struct T1Comparison {
  bool pass = true;
  std::vector<std::string> missing;        // exact entries not computed
  std::vector<std::string> flaggedAbsent;  // informational
  std::string detail;
};
/// Maps are compared as (source, image monomial) pairs, so factor order in
/// the fixture does not matter.
T1Comparison compareT1Fixture(const std::vector<T1Generator>& computed, const T1Fixture& fixture,
                              const Poset& poset);

}  // namespace lp

#endif  // LP_FIXTURE_HPP
