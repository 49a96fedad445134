#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lp/cotangent.hpp"
#include "lp/deformation.hpp"
#include "lp/grading.hpp"
#include "lp/letterplace.hpp"
#include "lp/render.hpp"
#include "lp/verifier.hpp"

namespace py = pybind11;

namespace {

lp::GroebnerLimits limitsOf(std::uint64_t maxSPairs, std::int64_t maxWeight) {
  lp::GroebnerLimits l;
  l.maxSPairs = maxSPairs;
  l.maxWeight = maxWeight;
  return l;
}

std::vector<std::string> generators(const std::string& text, const std::string& ideal) {
  const lp::Poset poset = lp::parsePoset(text);
  std::vector<std::string> out;
  if (ideal == "L") {
    for (const auto& m : lp::letterplaceGenerators(poset).generators) out.push_back(lp::renderMonomial(m, poset));
    return out;
  }
  if (ideal != "J") throw py::value_error("ideal must be 'L' or 'J'");
  const lp::RootedTree tree = lp::asRootedTree(poset);
  const lp::MonomialOrder order = lp::defaultOrder(tree);
  for (const auto& g : lp::DeformationContext(tree).jIdealGenerators().generators)
    out.push_back(lp::renderPolynomial(g, poset, &order));
  return out;
}

std::vector<std::string> t1(const std::string& text) {
  const lp::Poset poset = lp::parsePoset(text);
  std::vector<std::string> out;
  for (const auto& g : lp::t1Generators(poset)) out.push_back(lp::renderT1(g, poset));
  return out;
}

py::list check(const std::string& text, const std::string& suite, std::int64_t maxDegree, std::uint64_t maxSPairs,
               std::int64_t maxWeight) {
  if (suite != "basic" && suite != "full") throw py::value_error("suite must be 'basic' or 'full'");
  const lp::Poset poset = lp::parsePoset(text);
  lp::Verifier v(lp::asRootedTree(poset), limitsOf(maxSPairs, maxWeight));
  py::list out;
  for (const auto& r : v.runSuite(suite == "full" ? lp::Suite::Full : lp::Suite::Basic, maxDegree)) {
    py::dict d;
    d["check"] = r.name;
    d["instance"] = r.instance;
    d["passed"] = r.pass;
    d["witness"] = lp::renderPolynomial(r.witness, poset, &v.order());
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

py::dict hilbert(const std::string& text, std::int64_t maxDegree, std::uint64_t maxSPairs, std::int64_t maxWeight) {
  const lp::Poset poset = lp::parsePoset(text);
  const lp::RootedTree tree = lp::asRootedTree(poset);
  lp::Verifier v(tree, limitsOf(maxSPairs, maxWeight));
  const auto weights = lp::positivityWitness(tree);
  const auto hL = lp::countStandardMonomials(lp::letterplaceGenerators(poset).generators, weights, maxDegree);
  const auto hJ = lp::countStandardMonomials(v.basis().leadingMonomials(), weights, maxDegree);
  py::dict d;
  d["L"] = hL;
  d["J"] = hJ;
  d["equal"] = hL == hJ;
  return d;
}

py::dict info(const std::string& text) {
  const lp::Poset poset = lp::parsePoset(text);
  py::dict d;
  d["size"] = poset.size();
  d["codimension"] = lp::letterplaceCodimension(poset);
  d["multiplicity"] = lp::countOrderIdeals(poset);
  d["t1_generators"] = lp::t1Generators(poset).size();
  try {
    d["u_variables"] = lp::uVariables(lp::asRootedTree(poset)).size();
    d["rooted_tree"] = true;
  } catch (const lp::NotATreeError&) {
    d["u_variables"] = py::none();
    d["rooted_tree"] = false;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_lpdeform, m) {
  m.doc() = "Letterplace ideals of rooted-tree posets and their deformations";

  // Later registrations are tried first, so the subclass goes second.
  const auto& error = py::register_exception<lp::Error>(m, "LpError", PyExc_ValueError);
  py::register_exception<lp::ResourceLimitError>(m, "ResourceLimitError", error.ptr());

  const lp::GroebnerLimits defaults;
  m.def("poset_json", [](const std::string& text) { return lp::posetToJson(lp::parsePoset(text)); },
        py::arg("text"), "Poset as a JSON string with elements, covers and root.");
  m.def("generators", &generators, py::arg("text"), py::arg("ideal") = "J",
        "Generators of L(2,P) or J(2,P), rendered as text.");
  m.def("t1", &t1, py::arg("text"), "Minimal generators of T^1 as `p1*p2 -> image` lines.");
  m.def("check", &check, py::arg("text"), py::arg("suite") = "basic", py::arg("max_degree") = 4,
        py::arg("max_spairs") = defaults.maxSPairs, py::arg("max_weight") = defaults.maxWeight);
  m.def("hilbert", &hilbert, py::arg("text"), py::arg("max_degree"), py::arg("max_spairs") = defaults.maxSPairs,
        py::arg("max_weight") = defaults.maxWeight);
  m.def("info", &info, py::arg("text"));
}
