#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/intersect.hpp"

namespace toric {

enum class ClassKind {
  ToddLRR,
  ToddOmega,
  HirzebruchUnnormalized,
  HirzebruchNormalized,
  MockHirzebruch,
  ChernEhler,
  ToddSubset,
  TClass,
  MockTClass,
};

const char* class_kind_name(ClassKind kind);
bool class_kind_normalized(ClassKind kind);    // admits y = -1
bool class_kind_takes_y(ClassKind kind);       // output depends on y
bool class_kind_takes_subset(ClassKind kind);  // restricts to a star-closed subset

struct ClassRequest {
  ClassKind kind = ClassKind::HirzebruchNormalized;
  std::optional<Rational> y;                  // y = -1 only on normalized kinds
  std::optional<std::vector<ConeId>> subset;  // star-closed cone ids
};

// chi_y genus of the union of orbits indexed by the subset: each cone sigma
// contributes (-1-y)^{dim O_sigma}.  Purely combinatorial; any subset works.
YPolynomial chi_y_subset(const Fan& fan, const ConeSubset& subset);

// Todd class: summing over each cone's interior group elements, the product
// over rays of x/(1 - a e^{-x}) capped with [X].
CycleClass todd_lrr(const Fan& fan);

// Todd class of the canonical sheaf: factors a x e^{-x}/(1 - a e^{-x}).
CycleClass todd_omega(const Fan& fan);

// Hirzebruch class.  Normalized uses factors x(1 + y a e^{-x(1+y)})/(1 - a
// e^{-x(1+y)}); un-normalized uses x(1 + y a e^{-x})/(1 - a e^{-x}) with a
// global prefactor (1+y)^(rank - #rays), which also covers torus factors.
CycleClass hirzebruch_class(const Fan& fan, bool normalized);

// Divide the homological degree-k part by (1+y)^k; rank fixes the grading.
CycleClass normalize_class(const CycleClass& c, std::size_t rank);

// Product over rays outside sigma of the normalized regular factor, applied
// to [V_sigma]; sigma absent means the fan itself.  No group corrections.
CycleClass mock_hirzebruch(const Fan& fan, const std::optional<ConeId>& sigma = std::nullopt);

// (1/mult) sum over interior group elements of the product over the cone's
// rays of (1 + y a e^{-x(1+y)})/(1 - a e^{-x(1+y)}); requires mult > 1.
CohomExpression correction_series(const Fan& fan, const ConeId& sigma);

// Mock class plus, for each singular cone, its correction applied to the
// mock class of the orbit closure.
CycleClass hirzebruch_decomposed(const Fan& fan);

// Sum over the subset of (1+y)-weighted pushforwards of the canonical-sheaf
// Todd classes of the orbit closures; weight (1+y)^{dim O} un-normalized,
// (1+y)^{dim O - k} in homological degree k normalized.
CycleClass orbit_classes_subset(const Fan& fan, const ConeSubset& subset, bool normalized);

// Sum of the orbit closure cycles themselves (the y = -1 specialization).
CycleClass chern_ehler(const Fan& fan, const ConeSubset& subset);

// Sum of pushed-forward canonical-sheaf Todd classes (the y = 0 case).
CycleClass todd_subset(const Fan& fan, const ConeSubset& subset);

CycleClass t_class(const Fan& fan);       // 2^{rank-k}-scaled Todd components
CycleClass mock_t_class(const Fan& fan);  // orbit sum of mock classes at y = 1

struct TClassSuite {
  CycleClass t;
  CycleClass t_mock;
  // Per cone: 1 at the zero cone, 0 at smooth positive-dimensional cones,
  // else the y = 1 correction with x -> x/2 substituted.
  std::map<ConeId, CohomExpression> alpha;
};

TClassSuite t_class_suite(const Fan& fan);

// Substitute a rational number for y in every coefficient.
CycleClass evaluate_class(const CycleClass& c, const Rational& y0);

CycleClass compute_class(const Fan& fan, const ClassRequest& request);

struct IdentityResult {
  std::string name;
  std::string statement;
  bool pass = false;
  std::string witness;  // offending pairing when failing
};

struct IdentityReport {
  std::vector<IdentityResult> identities;
  bool all_pass = true;
};

// Evaluate every class identity of the engine on a complete fan, comparing
// independent computation paths through the intersection pairing.
IdentityReport verify_identities(const Fan& fan);

}  // namespace toric
