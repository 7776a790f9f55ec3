#include "toric/counting.hpp"

#include <doctest.h>

#include <vector>

#include "toric/errors.hpp"

#include "test_util.hpp"

using namespace toric;
using namespace toric::testutil;

namespace {

LatticePolytope unit_square() {
  return LatticePolytope::build({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

LatticePolytope square2() {
  return LatticePolytope::build({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
}

LatticePolytope standard_triangle() {
  return LatticePolytope::build({{0, 0}, {1, 0}, {0, 1}});
}

LatticePolytope scaled_triangle(long m) {
  return LatticePolytope::build({{0, 0}, {m, 0}, {0, m}});
}

// Normal fan has one cone of multiplicity 2.
LatticePolytope tall_triangle() {
  return LatticePolytope::build({{0, 0}, {1, 0}, {0, 2}});
}

// Smooth hexagon; all edge directions primitive.
LatticePolytope hexagon() {
  return LatticePolytope::build({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
}

LatticePolytope skew_triangle() {
  return LatticePolytope::build({{0, 0}, {3, 1}, {1, 2}});
}

LatticePolytope tetrahedron() {
  return LatticePolytope::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

// Simple, but the normal fan has singular cones.
LatticePolytope tall_tetrahedron() {
  return LatticePolytope::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
}

LatticePolytope cube(long m) {
  std::vector<IntVector> vs;
  for (long x = 0; x <= m; x += m)
    for (long y = 0; y <= m; y += m)
      for (long z = 0; z <= m; z += m) vs.push_back(ivec({x, y, z}));
  return LatticePolytope::build(std::move(vs));
}

// The apex sits on four facets, so the polytope is not simple.
LatticePolytope square_pyramid() {
  return LatticePolytope::build(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}

YPolynomial ypoly(std::vector<long> cs) {
  std::vector<Rational> r;
  for (long c : cs) r.emplace_back(c);
  return YPolynomial(std::move(r));
}

std::vector<Rational> rats(std::vector<Rational> v) { return v; }

DivisorClass divisor_of(const LatticePolytope& p) {
  DivisorClass d;
  const std::vector<Int> coeffs = polytope_divisor(p);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    d.coefficients[static_cast<int>(i)] = Rational(coeffs[i]);
  return d;
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("brute-force dilation counts") {
  CHECK(ehrhart_bruteforce(unit_square(), 2) == std::vector<Int>{1, 4, 9});
  CHECK(ehrhart_bruteforce(standard_triangle(), 2) == std::vector<Int>{1, 3, 6});
  CHECK(ehrhart_bruteforce(tetrahedron(), 2) == std::vector<Int>{1, 4, 10});
  CHECK(ehrhart_bruteforce(cube(1), 2) == std::vector<Int>{1, 8, 27});
  CHECK(ehrhart_bruteforce(tall_triangle(), 3) == std::vector<Int>{1, 4, 9, 16});
}

TEST_CASE("ehrhart coefficients of simple polytopes") {
  CHECK(ehrhart_via_classes(standard_triangle()).coefficients ==
        rats({Rational(1), make_rational(3, 2), make_rational(1, 2)}));
  CHECK(ehrhart_via_classes(unit_square()).coefficients ==
        rats({Rational(1), Rational(2), Rational(1)}));
  CHECK(ehrhart_via_classes(tall_triangle()).coefficients ==
        rats({Rational(1), Rational(2), Rational(1)}));
  CHECK(ehrhart_via_classes(square2()).coefficients ==
        rats({Rational(1), Rational(4), Rational(4)}));
  CHECK(ehrhart_via_classes(hexagon()).coefficients ==
        rats({Rational(1), Rational(3), Rational(3)}));
  CHECK(ehrhart_via_classes(cube(1)).coefficients ==
        rats({Rational(1), Rational(3), Rational(3), Rational(1)}));
  CHECK(ehrhart_via_classes(tetrahedron()).coefficients ==
        rats({Rational(1), make_rational(11, 6), Rational(1), make_rational(1, 6)}));

  const EhrhartResult triangle = ehrhart_via_classes(standard_triangle());
  CHECK(triangle.brute_counts == std::vector<Int>{1, 3, 6, 10, 15});
  CHECK(triangle.residuals.size() == 5);

  // Leading coefficient = normalized volume, constant term = 1, and the
  // polynomial reproduces every brute-force count.
  const std::vector<LatticePolytope> fixtures = {
      standard_triangle(), unit_square(), square2(),      tall_triangle(),
      hexagon(),           skew_triangle(), tetrahedron(), tall_tetrahedron(),
      cube(1),             cube(2)};
  for (const LatticePolytope& p : fixtures) {
    const EhrhartResult er = ehrhart_via_classes(p);
    CAPTURE(p.vertices().size());
    CHECK(er.coefficients.front() == Rational(1));
    CHECK(er.coefficients.back() > 0);
    CHECK(er.coefficients.size() == p.rank() + 1);
    CHECK(er.brute_counts.size() == p.rank() + 3);
    for (const Rational& r : er.residuals) CHECK(r == 0);
  }
  CHECK(ehrhart_via_classes(tall_tetrahedron()).coefficients.back() ==
        make_rational(1, 3));
}

TEST_CASE("ehrhart rejects non-simple polytopes") {
  CHECK_THROWS_WITH_AS(ehrhart_via_classes(square_pyramid()),
                       doctest::Contains("NotSimple"), ToricError);
  try {
    weighted_count_identity(square_pyramid());
    FAIL("expected a throw");
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotSimple);
  }
}

TEST_CASE("ehrhart reciprocity") {
  // (-1)^d Ehr(-l) counts the interior points of the l-fold dilation.
  const std::vector<LatticePolytope> fixtures = {
      standard_triangle(), square2(),          tall_triangle(), hexagon(),
      tetrahedron(),       tall_tetrahedron(), cube(1)};
  for (const LatticePolytope& p : fixtures) {
    const EhrhartResult er = ehrhart_via_classes(p);
    const long d = static_cast<long>(p.rank());
    for (unsigned long l = 1; l <= 3; ++l) {
      Rational value(0);
      Rational power(1);
      for (const Rational& a : er.coefficients) {
        value += a * power;
        power *= Rational(-static_cast<long>(l));
      }
      value *= rational_pow(Rational(-1), d);
      CHECK(value == Rational(count_lattice_points(p, l, true)));
    }
  }
}

TEST_CASE("max dilation override") {
  const EhrhartResult er = ehrhart_via_classes(square2(), 5);
  CHECK(er.brute_counts == std::vector<Int>{1, 9, 25, 49, 81, 121});
  CHECK(er.residuals.size() == 6);
  for (const Rational& r : er.residuals) CHECK(r == 0);
  CHECK(ehrhart_via_classes(square2(), 0).brute_counts == std::vector<Int>{1});
}

TEST_CASE("weighted counts on the full face lattice") {
  const WeightedCountReport sq = weighted_count_identity(unit_square());
  CHECK(sq.lhs == ypoly({4}));
  CHECK(sq.rhs == ypoly({4}));
  CHECK(sq.equal);

  // 1 interior point, 4 edge points, 4 vertices: (1+y)^2 + 4(1+y) + 4.
  const WeightedCountReport sq2 = weighted_count_identity(square2());
  CHECK(sq2.lhs == ypoly({9, 6, 1}));
  CHECK(sq2.equal);
  CHECK(sq2.lhs.evaluate(Rational(0)) == Rational(9));

  const WeightedCountReport tall = weighted_count_identity(tall_triangle());
  CHECK(tall.equal);
  CHECK(tall.lhs.evaluate(Rational(0)) ==
        Rational(count_lattice_points(tall_triangle(), 1)));

  // 8 vertices, 12 edge interiors, 6 facet interiors, 1 interior point.
  const WeightedCountReport c2 = weighted_count_identity(cube(2));
  CHECK(c2.lhs == ypoly({27, 27, 9, 1}));
  CHECK(c2.equal);

  CHECK(weighted_count_identity(tall_tetrahedron()).equal);
  CHECK(weighted_count_identity(skew_triangle()).equal);
}

TEST_CASE("weighted counts on subcomplexes") {
  const LatticePolytope p = square2();

  const WeightedCountReport boundary =
      weighted_count_identity(p, boundary_subcomplex(p));
  CHECK(boundary.lhs == ypoly({8, 4}));  // 4 + 4(1+y)
  CHECK(boundary.rhs == ypoly({8, 4}));
  CHECK(boundary.equal);

  std::vector<std::size_t> verts;
  for (std::size_t fi = 0; fi < p.faces().size(); ++fi)
    if (p.faces()[fi].dim == 0) verts.push_back(fi);
  const WeightedCountReport corners =
      weighted_count_identity(p, make_subcomplex(p, verts));
  CHECK(corners.lhs == ypoly({4}));
  CHECK(corners.equal);

  const LatticePolytope c2 = cube(2);
  const WeightedCountReport shell =
      weighted_count_identity(c2, boundary_subcomplex(c2));
  CHECK(shell.lhs == ypoly({26, 24, 6}));  // 8 + 12(1+y) + 6(1+y)^2
  CHECK(shell.equal);

  // A face set missing some of its faces is rejected on the fan side.
  try {
    weighted_count_identity(p, PolytopalSubcomplex{{p.full_face()}});
    FAIL("expected a throw");
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotStarClosed);
  }
  try {
    weighted_count_identity(p, PolytopalSubcomplex{{999}});
    FAIL("expected a throw");
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::InvalidInput);
  }
}

TEST_CASE("dual weighted counts") {
  const WeightedCountReport sq =
      weighted_count_identity(unit_square(), std::nullopt, WeightedMode::Dual);
  CHECK(sq.lhs == YPolynomial(Rational(1)));  // 4 - 4*2/2 + 4/4
  CHECK(sq.rhs == YPolynomial(Rational(1)));
  CHECK(sq.equal);

  const WeightedCountReport sq2 =
      weighted_count_identity(square2(), std::nullopt, WeightedMode::Dual);
  CHECK(sq2.lhs == YPolynomial(Rational(4)));  // 9 - 12/2 + 4/4
  CHECK(sq2.equal);

  const WeightedCountReport tall =
      weighted_count_identity(tall_triangle(), std::nullopt, WeightedMode::Dual);
  CHECK(tall.lhs == YPolynomial(make_rational(5, 4)));  // 4 - 7/2 + 3/4
  CHECK(tall.equal);

  const WeightedCountReport c2 =
      weighted_count_identity(cube(2), std::nullopt, WeightedMode::Dual);
  CHECK(c2.lhs == YPolynomial(Rational(8)));  // 27 - 54/2 + 36/4 - 8/8
  CHECK(c2.equal);

  CHECK(weighted_count_identity(tall_tetrahedron(), std::nullopt,
                                WeightedMode::Dual)
            .equal);
  CHECK(weighted_count_identity(skew_triangle(), std::nullopt,
                                WeightedMode::Dual)
            .equal);

  // Passing the full complex explicitly is allowed, anything smaller is not.
  const LatticePolytope p = square2();
  const WeightedCountReport full =
      weighted_count_identity(p, full_subcomplex(p), WeightedMode::Dual);
  CHECK(full.lhs == YPolynomial(Rational(4)));
  try {
    weighted_count_identity(p, boundary_subcomplex(p), WeightedMode::Dual);
    FAIL("expected a throw");
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::InvalidInput);
  }
}

TEST_CASE("half-weight relative-interior identity") {
  // At y = 1, scaling the weighted count by 2^-d turns the face weights
  // into (1/2)^codim on relative-interior counts.
  const std::vector<LatticePolytope> fixtures = {square2(), tall_triangle(),
                                                 hexagon(), cube(2)};
  for (const LatticePolytope& p : fixtures) {
    const long d = static_cast<long>(p.rank());
    Rational lhs(0);
    for (std::size_t fi = 0; fi < p.faces().size(); ++fi)
      lhs += rational_pow(make_rational(1, 2), d - p.faces()[fi].dim) *
             Rational(count_lattice_points(p, fi, 1, true));
    const WeightedCountReport wc = weighted_count_identity(p);
    CHECK(lhs == wc.rhs.evaluate(Rational(1)) * rational_pow(make_rational(1, 2), d));
  }
}

TEST_CASE("interior points through the twisted canonical class") {
  const std::vector<LatticePolytope> fixtures = {
      square2(), scaled_triangle(2), scaled_triangle(3), tall_triangle(),
      cube(1),   cube(2),            tall_tetrahedron()};
  for (const LatticePolytope& p : fixtures) {
    const NormalFan nf = normal_fan(p);
    const YRational got = degree(
        nf.fan, cohom_cap(nf.fan, exp_divisor(divisor_of(p), p.rank()),
                          todd_omega(nf.fan)));
    CHECK(got.as_polynomial() ==
          YPolynomial(Rational(count_lattice_points(p, 1, true))));
  }
}

TEST_CASE("sheaf euler characteristic tables") {
  const SheafEulerTable tri = hirzebruch_polynomial(standard_triangle());
  CHECK(tri.chi_y == ypoly({3}));
  CHECK(tri.per_p == rats({Rational(3), Rational(0), Rational(0)}));

  const SheafEulerTable sq2 = hirzebruch_polynomial(square2());
  CHECK(sq2.chi_y == ypoly({9, 6, 1}));
  CHECK(sq2.chi_y.evaluate(Rational(0)) == Rational(9));

  CHECK(hirzebruch_polynomial(cube(2)).per_p ==
        rats({Rational(27), Rational(27), Rational(9), Rational(1)}));

  // Untwisted: the chi_y genus of the projective plane.
  CHECK(hirzebruch_polynomial(fix_p2(), DivisorClass{}).chi_y ==
        ypoly({1, -1, 1}));

  // Coefficient p collects relative-interior counts of faces of dimension
  // >= p with binomial weights.
  const std::vector<LatticePolytope> fixtures = {
      square2(), tall_triangle(), hexagon(), cube(2), tall_tetrahedron()};
  for (const LatticePolytope& p : fixtures) {
    const SheafEulerTable table = hirzebruch_polynomial(p);
    const std::size_t d = p.rank();
    std::vector<Rational> relint_by_dim(d + 1, Rational(0));
    for (std::size_t fi = 0; fi < p.faces().size(); ++fi)
      relint_by_dim[p.faces()[fi].dim] +=
          Rational(count_lattice_points(p, fi, 1, true));
    REQUIRE(table.per_p.size() == d + 1);
    for (std::size_t pp = 0; pp <= d; ++pp) {
      Rational expect(0);
      for (std::size_t i = pp; i <= d; ++i)
        expect += binomial(i, pp) * relint_by_dim[i];
      CHECK(table.per_p[pp] == expect);
    }
  }

  const Fan half = build_fan(2, {ivec({1, 0}), ivec({0, 1})}, {{0, 1}});
  try {
    hirzebruch_polynomial(half, DivisorClass{});
    FAIL("expected a throw");
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotComplete);
  }
}

TEST_CASE("pick reports") {
  const PickReport sq2 = pick_report(square2());
  CHECK(sq2.area == Rational(4));
  CHECK(sq2.boundary_points == 8);
  CHECK(sq2.interior_points == 1);
  CHECK(sq2.total_points == 9);
  CHECK(sq2.vertex_count == 4);
  CHECK(sq2.ypick_lhs == ypoly({9, 6, 1}));
  CHECK(sq2.ypick_rhs == ypoly({9, 6, 1}));
  CHECK(sq2.ypick_equal);
  CHECK(sq2.classical_pick);

  const PickReport tri2 = pick_report(scaled_triangle(2));
  CHECK(tri2.area == Rational(2));
  CHECK(tri2.boundary_points == 6);
  CHECK(tri2.total_points == 6);
  CHECK(tri2.vertex_count == 3);
  CHECK(tri2.ypick_equal);
  CHECK(tri2.classical_pick);

  const PickReport sq = pick_report(unit_square());
  CHECK(sq.area == Rational(1));
  CHECK(sq.interior_points == 0);
  CHECK(sq.ypick_lhs == ypoly({4}));
  CHECK(sq.ypick_rhs == ypoly({4}));
  CHECK(sq.ypick_equal);
  CHECK(sq.classical_pick);

  const PickReport skew = pick_report(skew_triangle());
  CHECK(skew.area == make_rational(5, 2));
  CHECK(skew.boundary_points == 3);
  CHECK(skew.interior_points == 2);
  CHECK(skew.total_points == 5);
  CHECK(skew.ypick_equal);
  CHECK(skew.classical_pick);

  const PickReport hex = pick_report(hexagon());
  CHECK(hex.area == Rational(3));
  CHECK(hex.boundary_points == 6);
  CHECK(hex.total_points == 7);
  CHECK(hex.vertex_count == 6);
  CHECK(hex.ypick_equal);
  CHECK(hex.classical_pick);

  try {
    pick_report(tetrahedron());
    FAIL("expected a throw");
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotPolygon);
  }
}

}  // TEST_SUITE
