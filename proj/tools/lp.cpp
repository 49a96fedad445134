// lp: command-line front end for letterplace ideals and their deformations.
//
//   lp gens    <poset> [--ideal L|J] [--json] [--compare FIXTURE]
//   lp t1      <poset> [--json] [--compare FIXTURE]
//   lp check   <poset> [--suite basic|full] [--max-degree N] [--json] [--timing]
//   lp hilbert <poset> --max-degree N [--json]
//   lp info    <poset> [--json] [--poset-json]
//
// Exit codes: 0 success/PASS, 1 FAIL, 2 usage or input error, 3 resource limit.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lp/cotangent.hpp"
#include "lp/deformation.hpp"
#include "lp/fixture.hpp"
#include "lp/grading.hpp"
#include "lp/letterplace.hpp"
#include "lp/render.hpp"
#include "lp/verifier.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
  std::string posetFile;
  std::string ideal = "J";
  std::string compare;
  std::string suite = "basic";
  std::int64_t maxDegree = 4;
  bool json = false;
  bool timing = false;
  bool posetJson = false;
  std::uint64_t maxSPairs = lp::GroebnerLimits{}.maxSPairs;
  std::int64_t maxWeight = lp::GroebnerLimits{}.maxWeight;
};

lp::GroebnerLimits limitsOf(const Options& o) { return {o.maxSPairs, o.maxWeight}; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json posetJson(const lp::Poset& poset) { return json::parse(lp::posetToJson(poset)); }

json pairJson(const lp::Poset& poset, lp::Element p, lp::Element q) {
  return json::array({poset.name(p), poset.name(q)});
}

int runGens(const Options& o) {
  const lp::Poset poset = lp::readPosetFile(o.posetFile);
  std::vector<std::pair<lp::Element, lp::Element>> pairs;
  std::vector<lp::Polynomial> gens;
  std::optional<lp::MonomialOrder> order;
  if (o.ideal == "L") {
    const auto ideal = lp::letterplaceGenerators(poset);
    pairs = ideal.pairs;
    gens = ideal.polynomials();
  } else {
    const lp::RootedTree tree = lp::asRootedTree(poset);
    const auto ideal = lp::DeformationContext(tree).jIdealGenerators();
    pairs = ideal.pairs;
    gens = ideal.generators;
    order = lp::defaultOrder(tree);
  }
  const lp::MonomialOrder* ord = order ? &*order : nullptr;

  std::optional<lp::FixtureDiff> diff;
  if (!o.compare.empty()) diff = lp::compareFixture(gens, lp::readPolynomialFixture(o.compare, poset));

  if (o.json) {
    json out{{"poset", posetJson(poset)}, {"ideal", o.ideal}};
    json list = json::array();
    for (std::size_t i = 0; i < gens.size(); ++i)
      list.push_back({{"pair", pairJson(poset, pairs[i].first, pairs[i].second)},
                      {"text", lp::renderPolynomial(gens[i], poset, ord)},
                      {"terms", lp::polynomialToJson(gens[i], poset, ord)}});
    out["generators"] = std::move(list);
    if (diff) {
      const auto texts = [&](const std::vector<lp::Polynomial>& v) {
        json a = json::array();
        for (const auto& f : v) a.push_back(lp::renderPolynomial(f, poset, ord));
        return a;
      };
      json mism = json::array();
      for (const auto& [want, got] : diff->mismatched)
        mism.push_back({{"expected", lp::renderPolynomial(want, poset, ord)},
                        {"computed", lp::renderPolynomial(got, poset, ord)}});
      out["compare"] = {{"fixture", o.compare},
                        {"pass", diff->empty()},
                        {"missing", texts(diff->missing)},
                        {"extra", texts(diff->extra)},
                        {"mismatched", std::move(mism)}};
    }
    emit(out);
  } else {
    for (const auto& g : gens) std::cout << lp::renderPolynomial(g, poset, ord) << '\n';
    if (diff) {
      std::cout << lp::renderDiff(*diff, poset, ord);
      std::cout << (diff->empty() ? "PASS" : "FAIL") << " compare " << o.compare << '\n';
    }
  }
  return diff && !diff->empty() ? kFail : kOk;
}

int runT1(const Options& o) {
  const lp::Poset poset = lp::readPosetFile(o.posetFile);
  const auto gens = lp::t1Generators(poset);
  std::optional<lp::T1Comparison> cmp;
  if (!o.compare.empty()) cmp = lp::compareT1Fixture(gens, lp::readT1Fixture(o.compare), poset);

  if (o.json) {
    json list = json::array();
    for (const auto& g : gens) {
      json lower = json::array(), upper = json::array();
      for (auto r : g.lowerSet) lower.push_back(poset.name(r));
      for (auto s : g.upperSet) upper.push_back(poset.name(s));
      list.push_back({{"source", poset.name(g.source)},
                      {"lower", std::move(lower)},
                      {"upper", std::move(upper)},
                      {"image", lp::renderMonomial(g.image, poset)},
                      {"text", lp::renderT1(g, poset)}});
    }
    json out{{"poset", posetJson(poset)}, {"count", gens.size()}, {"generators", std::move(list)}};
    if (cmp)
      out["compare"] = {{"fixture", o.compare},
                        {"pass", cmp->pass},
                        {"missing", cmp->missing},
                        {"flagged_absent", cmp->flaggedAbsent},
                        {"detail", cmp->detail}};
    emit(out);
  } else {
    for (const auto& g : gens) std::cout << lp::renderT1(g, poset) << '\n';
    if (cmp) {
      for (const auto& m : cmp->missing) std::cout << "- " << m << '\n';
      for (const auto& m : cmp->flaggedAbsent) std::cout << "? " << m << " (flagged entry not computed)\n";
      std::cout << (cmp->pass ? "PASS" : "FAIL") << " compare " << o.compare;
      if (!cmp->detail.empty()) std::cout << ": " << cmp->detail;
      std::cout << '\n';
    }
  }
  return cmp && !cmp->pass ? kFail : kOk;
}

int runCheck(const Options& o) {
  const lp::Poset poset = lp::readPosetFile(o.posetFile);
  const lp::RootedTree tree = lp::asRootedTree(poset);
  lp::Verifier verifier(tree, limitsOf(o));
  const auto reports =
      verifier.runSuite(o.suite == "full" ? lp::Suite::Full : lp::Suite::Basic, o.maxDegree);
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.pass ? 0 : 1;

  if (o.json) {
    json list = json::array();
    for (const auto& r : reports) {
      json item{{"check", r.name},
                {"instance", r.instance},
                {"verdict", r.pass ? "PASS" : "FAIL"},
                {"witness", lp::renderPolynomial(r.witness, poset, &verifier.order())},
                {"detail", r.detail}};
      if (o.timing) item["elapsed_ms"] = r.elapsedMs;
      list.push_back(std::move(item));
    }
    emit({{"poset", posetJson(poset)},
          {"suite", o.suite},
          {"reports", std::move(list)},
          {"passed", reports.size() - failed},
          {"failed", failed}});
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.instance.empty()) std::cout << " [" << r.instance << "]";
      if (!r.detail.empty()) std::cout << " " << r.detail;
      if (!r.pass && !r.witness.isZero())
        std::cout << " witness: " << lp::renderPolynomial(r.witness, poset, &verifier.order());
      if (o.timing) std::cout << " (" << r.elapsedMs << " ms)";
      std::cout << '\n';
    }
    std::cout << reports.size() << " checks, " << failed << " failed\n";
  }
  return failed ? kFail : kOk;
}

int runHilbert(const Options& o) {
  const lp::Poset poset = lp::readPosetFile(o.posetFile);
  const lp::RootedTree tree = lp::asRootedTree(poset);
  lp::Verifier verifier(tree, limitsOf(o));
  const lp::WeightMap weights = lp::positivityWitness(tree);
  const auto hL = lp::countStandardMonomials(lp::letterplaceGenerators(poset).generators, weights, o.maxDegree);
  const auto hJ = lp::countStandardMonomials(verifier.basis().leadingMonomials(), weights, o.maxDegree);
  const bool pass = hL == hJ;
  if (o.json) {
    emit({{"poset", posetJson(poset)},
          {"max_degree", o.maxDegree},
          {"grading", "d-coarsened"},
          {"L", hL},
          {"J", hJ},
          {"verdict", pass ? "PASS" : "FAIL"}});
  } else {
    const auto show = [](const std::vector<std::uint64_t>& v) {
      std::string s;
      for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
      return s;
    };
    std::cout << "L: " << show(hL) << '\n' << "J: " << show(hJ) << '\n';
    std::cout << (pass ? "PASS" : "FAIL") << " hilbert (d-coarsened, degree <= " << o.maxDegree << ")\n";
  }
  return pass ? kOk : kFail;
}

int runInfo(const Options& o) {
  const lp::Poset poset = lp::readPosetFile(o.posetFile);
  if (o.posetJson) {
    std::cout << lp::posetToJson(poset) << '\n';
    return kOk;
  }
  std::optional<lp::RootedTree> tree;
  try {
    tree = lp::asRootedTree(poset);
  } catch (const lp::NotATreeError&) {
  }
  const std::size_t t1 = lp::t1Generators(poset).size();
  std::optional<std::size_t> uCount;
  if (tree) uCount = lp::uVariables(*tree).size();
  const bool consistent = !tree || *uCount == t1;

  if (o.json) {
    json out{{"poset", posetJson(poset)},
             {"size", poset.size()},
             {"codimension", lp::letterplaceCodimension(poset)},
             {"multiplicity", lp::countOrderIdeals(poset)},
             {"rooted_tree", tree.has_value()},
             {"u_variables", uCount ? json(*uCount) : json(nullptr)},
             {"t1_generators", t1},
             {"consistent", consistent}};
    emit(out);
  } else {
    std::cout << "elements: " << poset.size() << '\n';
    std::cout << "codimension: " << lp::letterplaceCodimension(poset) << '\n';
    std::cout << "multiplicity: " << lp::countOrderIdeals(poset) << '\n';
    std::cout << "rooted tree: " << (tree ? "yes" : "no") << '\n';
    if (uCount) std::cout << "u-variables: " << *uCount << '\n';
    std::cout << "T1 generators: " << t1 << '\n';
    if (tree) std::cout << (consistent ? "PASS" : "FAIL") << " |T1| = |u-variables|\n";
  }
  return consistent ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Letterplace ideals, their deformations and flatness checks"};
  app.require_subcommand(1);
  Options o;

  const auto addPoset = [&o](CLI::App* cmd) {
    cmd->add_option("poset", o.posetFile, "Poset file (`p < q` per line)")->required();
  };
  const auto addLimits = [&o](CLI::App* cmd) {
    cmd->add_option("--max-spairs", o.maxSPairs, "Groebner S-pair budget");
    cmd->add_option("--max-weight", o.maxWeight, "Groebner weight budget");
  };

  auto* gens = app.add_subcommand("gens", "Print the generators of L(2,P) or J(2,P)");
  addPoset(gens);
  gens->add_option("--ideal", o.ideal, "L or J")->check(CLI::IsMember({"L", "J"}));
  gens->add_option("--compare", o.compare, "Compare against a polynomial fixture");
  gens->add_flag("--json", o.json, "JSON output");

  auto* t1 = app.add_subcommand("t1", "Print minimal generators of T^1(S/L)");
  addPoset(t1);
  t1->add_option("--compare", o.compare, "Compare against a T^1 fixture");
  t1->add_flag("--json", o.json, "JSON output");

  auto* check = app.add_subcommand("check", "Run the verifier");
  addPoset(check);
  check->add_option("--suite", o.suite, "basic or full")->check(CLI::IsMember({"basic", "full"}));
  check->add_option("--max-degree", o.maxDegree, "Hilbert truncation degree")->check(CLI::NonNegativeNumber);
  check->add_flag("--json", o.json, "JSON output");
  check->add_flag("--timing", o.timing, "Report elapsed time per check");
  addLimits(check);

  auto* hilbert = app.add_subcommand("hilbert", "Compare Hilbert functions of L and J");
  addPoset(hilbert);
  hilbert->add_option("--max-degree", o.maxDegree, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
  hilbert->add_flag("--json", o.json, "JSON output");
  addLimits(hilbert);

  auto* info = app.add_subcommand("info", "Summary invariants of the poset");
  addPoset(info);
  info->add_flag("--json", o.json, "JSON output");
  info->add_flag("--poset-json", o.posetJson, "Print the poset as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gens->parsed()) return runGens(o);
    if (t1->parsed()) return runT1(o);
    if (check->parsed()) return runCheck(o);
    if (hilbert->parsed()) return runHilbert(o);
    if (info->parsed()) return runInfo(o);
  } catch (const lp::ResourceLimitError& e) {
    std::cerr << "lp: resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const lp::Error& e) {
    std::cerr << "lp: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
