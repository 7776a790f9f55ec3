#pragma once

#include <optional>
#include <vector>

#include "toric/classes.hpp"
#include "toric/polytope.hpp"

namespace toric {

// Ehrhart polynomial of a simple polytope through the normal fan: a_k is
// (1/k!) times the degree of [D_P]^k against the degree-k Todd component.
// Brute-force counts for dilations 0..L ride along, with the differences
// polynomial(l) - count; a correct run has every residual zero.
struct EhrhartResult {
  std::vector<Rational> coefficients;  // a_0 .. a_d
  std::vector<Int> brute_counts;       // l = 0 .. L
  std::vector<Rational> residuals;     // same range
};

// |lP cap M| for l = 0..max_dilate by direct enumeration.
std::vector<Int> ehrhart_bruteforce(const LatticePolytope& p,
                                    unsigned long max_dilate);

// Default dilation range is rank + 2, enough to overdetermine the degree-d
// polynomial by two sample points.
EhrhartResult ehrhart_via_classes(
    const LatticePolytope& p,
    std::optional<unsigned long> max_dilate = std::nullopt);

struct WeightedCountReport {
  YPolynomial lhs;  // weighted lattice-point count
  YPolynomial rhs;  // intersection-theoretic side
  bool equal = false;
};

enum class WeightedMode {
  Standard,  // sum over faces of (1+y)^dim |Relint Q cap M|
  Dual,      // sum over faces of (-1/2)^codim |Q cap M|
};

// Both sides of the weighted count identity for a simple polytope.  Standard
// mode pairs the relative-interior counts of a polytopal subcomplex against
// ch(O(D_P)) on the matching union of orbit closures; dual mode pairs the
// half-weighted closed counts of the full face lattice against the y = 1
// class scaled by 2^-dim and rejects proper subcomplexes.
WeightedCountReport weighted_count_identity(
    const LatticePolytope& p,
    const std::optional<PolytopalSubcomplex>& subcomplex = std::nullopt,
    WeightedMode mode = WeightedMode::Standard);

// chi_y(X, O(D)) together with the per-p sheaf Euler characteristics it
// collects: entry p is chi of the twisted sheaf of p-forms, i.e. the y^p
// coefficient.
struct SheafEulerTable {
  YPolynomial chi_y;
  std::vector<Rational> per_p;  // p = 0 .. rank
};

SheafEulerTable hirzebruch_polynomial(const Fan& fan, const DivisorClass& d);
SheafEulerTable hirzebruch_polynomial(const LatticePolytope& p);

// Lattice polygon report: Euclidean area, boundary/interior/vertex counts,
// both sides of the parametrized Pick identity
//   (1+y)^2 |Int P| + (1+y) sum_F |Relint F| + v
//     = (1+y)^2 Area + (1-y^2)/2 |boundary P| + chi_y(P),
// with chi_y(P) = (1+y)^2 - (1+y) #facets + v, and the classical check
// |P cap M| = Area + |boundary P|/2 + 1.
struct PickReport {
  Rational area;
  Int interior_points;
  Int boundary_points;
  Int total_points;
  std::size_t vertex_count = 0;
  YPolynomial ypick_lhs;
  YPolynomial ypick_rhs;
  bool ypick_equal = false;
  bool classical_pick = false;
};

PickReport pick_report(const LatticePolytope& p);

}  // namespace toric
