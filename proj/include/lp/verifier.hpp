#ifndef LP_VERIFIER_HPP
#define LP_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lp/deformation.hpp"
#include "lp/grading.hpp"
#include "lp/groebner.hpp"

namespace lp {

/// Outcome of one machine check.  `witness` is the nonzero normal form (or
/// offending polynomial) on FAIL and zero on PASS.
struct CheckReport {
  std::string name;
  std::string instance;  // e.g. "p=a b=b c=c"
  bool pass = true;
  Polynomial witness;
  std::string detail;
  double elapsedMs = 0.0;
};

enum class Suite { Basic, Full };

/// Membership checks of the flatness identities against one cached reduced
/// Groebner basis of the ideal.
///
/// The T-forms and S-operators always come from the recursion; the ideal
/// generators may be replaced to test the harness itself.
class Verifier {
public:
  explicit Verifier(const RootedTree& tree, GroebnerLimits limits = {});
  /// Uses `generators` (indexed like comparablePairs()) instead of J(2,P).
  Verifier(const RootedTree& tree, std::vector<Polynomial> generators, GroebnerLimits limits = {});

  const DeformationContext& context() const { return ctx_; }
  const RootedTree& tree() const { return ctx_.tree(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  /// Computed on first use.
  const GroebnerBasis& basis();

  /// Each generator is homogeneous of degree p1+q2 and maps to p1*q2 under u -> 0.
  CheckReport checkSpecialization();
  CheckReport checkHomogeneity();
  CheckReport checkDegreeFormulas();

  CheckReport checkFlatBasic(Element p, Element b, Element c);
  std::vector<CheckReport> checkFlatBasicAll();
  std::vector<CheckReport> checkLemmaIdentities();
  CheckReport checkFlatP2(Element a, Element b);
  std::vector<CheckReport> checkFlatP2All();
  std::vector<CheckReport> checkRelationLifts();
  /// d-coarsened Hilbert functions of B/J and B/L agree up to `maxDegree`.
  CheckReport compareHilbert(std::int64_t maxDegree);
  /// Tree T^1 formula matches the general enumeration; one map per parameter,
  /// degree-compatible.
  CheckReport checkT1Correspondence();

  /// Basic: specialization, homogeneity, degrees, T^1.  Full adds the flatness
  /// identities, relation lifts and the Hilbert comparison.
  std::vector<CheckReport> runSuite(Suite suite, std::int64_t maxDegree = 4);

private:
  CheckReport membership(std::string name, std::string instance, const Polynomial& expr,
                         bool requireUPositive = false);
  const Polynomial& generator(Element p, Element q) const;
  std::string names(std::initializer_list<std::pair<const char*, Element>> items) const;

  DeformationContext ctx_;
  std::vector<std::pair<Element, Element>> pairs_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  GroebnerLimits limits_;
  std::optional<GroebnerBasis> basis_;
};

bool allPass(const std::vector<CheckReport>& reports);

}  // namespace lp

#endif  // LP_VERIFIER_HPP
