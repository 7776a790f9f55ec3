#include "toric/polytope.hpp"

#include <doctest.h>

#include <algorithm>

#include "toric/errors.hpp"
#include "toric/fan.hpp"

using namespace toric;

namespace {

LatticePolytope unit_square() {
  return LatticePolytope::build({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

LatticePolytope standard_triangle() {
  return LatticePolytope::build({{0, 0}, {1, 0}, {0, 1}});
}

// conv{(0,0),(1,0),(0,m)}; its normal fan has one singular cone of index m.
LatticePolytope spike_triangle(long m) {
  return LatticePolytope::build({{0, 0}, {1, 0}, {0, m}});
}

bool has_facet(const LatticePolytope& p, const IntVector& normal, long offset) {
  for (const FacetData& f : p.facets())
    if (f.normal == normal && f.offset == offset) return true;
  return false;
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("facets of the unit square") {
  LatticePolytope p = unit_square();
  REQUIRE(p.facets().size() == 4);
  CHECK(has_facet(p, {1, 0}, 0));
  CHECK(has_facet(p, {0, 1}, 0));
  CHECK(has_facet(p, {-1, 0}, 1));
  CHECK(has_facet(p, {0, -1}, 1));
  for (const FacetData& f : p.facets()) CHECK(f.vertices.size() == 2);
}

TEST_CASE("facets of the standard triangle") {
  LatticePolytope p = standard_triangle();
  REQUIRE(p.facets().size() == 3);
  CHECK(has_facet(p, {1, 0}, 0));
  CHECK(has_facet(p, {0, 1}, 0));
  CHECK(has_facet(p, {-1, -1}, 1));
}

TEST_CASE("facets of a segment") {
  LatticePolytope p = LatticePolytope::build({{0}, {2}});
  REQUIRE(p.facets().size() == 2);
  CHECK(has_facet(p, {1}, 0));
  CHECK(has_facet(p, {-1}, 2));
  CHECK(p.faces().size() == 3);
}

TEST_CASE("facets of the standard 3-simplex") {
  LatticePolytope p = LatticePolytope::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  REQUIRE(p.facets().size() == 4);
  CHECK(has_facet(p, {1, 0, 0}, 0));
  CHECK(has_facet(p, {0, 1, 0}, 0));
  CHECK(has_facet(p, {0, 0, 1}, 0));
  CHECK(has_facet(p, {-1, -1, -1}, 1));
  // 4 vertices + 6 edges + 4 facets + the solid simplex
  CHECK(p.faces().size() == 15);
}

TEST_CASE("build rejections") {
  CHECK_THROWS_WITH_AS(
      LatticePolytope::build({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      doctest::Contains("rank at most 3"), ToricError);
  CHECK_THROWS_AS(LatticePolytope::build({{0, 0}, {1, 0}, {2, 0}}), ToricError);
  try {
    LatticePolytope::build({{0, 0}, {1, 0}, {2, 0}});
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotFullDimensional);
  }
  // (1,0) lies inside the hull edge from (0,0) to (2,0): not a vertex.
  CHECK_THROWS_AS(LatticePolytope::build({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), ToricError);
  CHECK_THROWS_AS(LatticePolytope::build({{0, 0}, {0, 0}, {1, 0}, {0, 1}}), ToricError);
}

TEST_CASE("face lattice of the unit square") {
  LatticePolytope p = unit_square();
  REQUIRE(p.faces().size() == 9);
  int by_dim[3] = {0, 0, 0};
  for (const Face& f : p.faces()) {
    REQUIRE(f.dim >= 0);
    REQUIRE(f.dim <= 2);
    ++by_dim[f.dim];
    if (f.dim == 0) CHECK(f.facets.size() == 2);
    if (f.dim == 1) CHECK(f.facets.size() == 1);
    if (f.dim == 2) CHECK(f.facets.empty());
  }
  CHECK(by_dim[0] == 4);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 1);
  CHECK(p.faces()[p.full_face()].vertices.size() == 4);
}

TEST_CASE("euler relation over the face lattice") {
  std::vector<LatticePolytope> fixtures;
  fixtures.push_back(unit_square());
  fixtures.push_back(standard_triangle());
  fixtures.push_back(spike_triangle(3));
  fixtures.push_back(LatticePolytope::build({{0}, {2}}));
  fixtures.push_back(
      LatticePolytope::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  fixtures.push_back(LatticePolytope::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                             {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  for (const LatticePolytope& p : fixtures) {
    long sum = 0;
    for (const Face& f : p.faces()) sum += (f.dim % 2 == 0) ? 1 : -1;
    CHECK(sum == 1);
  }
}

TEST_CASE("lattice point counts") {
  LatticePolytope sq = unit_square();
  CHECK(count_lattice_points(sq, 1) == 4);
  CHECK(count_lattice_points(sq, 2) == 9);
  CHECK(count_lattice_points(sq, 2, true) == 1);
  CHECK(count_lattice_points(sq, 1, true) == 0);
  CHECK(count_lattice_points(sq, 0) == 1);

  CHECK(count_lattice_points(spike_triangle(2), 1) == 4);
  CHECK(count_lattice_points(spike_triangle(3), 1) == 5);
  CHECK(count_lattice_points(spike_triangle(5), 1) == 7);

  LatticePolytope big = LatticePolytope::build({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  // relative interior of one edge of [0,2]^2 holds a single point
  bool found = false;
  for (std::size_t i = 0; i < big.faces().size(); ++i) {
    const Face& f = big.faces()[i];
    if (f.dim != 1) continue;
    found = true;
    CHECK(count_lattice_points(big, i, 1, true) == 1);
  }
  CHECK(found);
}

TEST_CASE("closed counts partition into relative interiors") {
  std::vector<LatticePolytope> fixtures;
  fixtures.push_back(unit_square());
  fixtures.push_back(spike_triangle(3));
  fixtures.push_back(
      LatticePolytope::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  for (const LatticePolytope& p : fixtures)
    for (unsigned long ell : {1ul, 2ul, 3ul}) {
      Int total = 0;
      for (std::size_t i = 0; i < p.faces().size(); ++i)
        total += count_lattice_points(p, i, ell, true);
      CHECK(total == count_lattice_points(p, ell));
    }
}

TEST_CASE("subcomplex counts") {
  LatticePolytope sq = unit_square();
  PolytopalSubcomplex boundary = boundary_subcomplex(sq);
  CHECK(boundary.faces.size() == 8);
  CHECK(count_lattice_points(sq, boundary, 1) == 4);
  CHECK(count_lattice_points(sq, boundary, 2) == 8);
  CHECK(count_lattice_points(sq, full_subcomplex(sq), 2) == 9);

  // union count agrees with the sum of member relative interiors
  for (unsigned long ell : {1ul, 2ul, 3ul}) {
    Int total = 0;
    for (std::size_t idx : boundary.faces) total += count_lattice_points(sq, idx, ell, true);
    CHECK(total == count_lattice_points(sq, boundary, ell));
  }

  // a lone edge without its endpoints is not a subcomplex
  std::size_t edge = 0;
  for (std::size_t i = 0; i < sq.faces().size(); ++i)
    if (sq.faces()[i].dim == 1) edge = i;
  CHECK_THROWS_WITH_AS(make_subcomplex(sq, {edge}), doctest::Contains("not closed"),
                       ToricError);
  // a vertex alone is fine
  CHECK(make_subcomplex(sq, {0}).faces.size() == 1);
  CHECK(count_lattice_points(sq, make_subcomplex(sq, {0}), 2) == 1);
}

TEST_CASE("normal fan of the standard triangle is the projective plane fan") {
  NormalFan nf = normal_fan(standard_triangle());
  CHECK(nf.fan.rank() == 2);
  REQUIRE(nf.fan.rays().size() == 3);
  std::vector<IntVector> rays = nf.fan.rays();
  std::sort(rays.begin(), rays.end());
  CHECK(rays[0] == IntVector{-1, -1});
  CHECK(rays[1] == IntVector{0, 1});
  CHECK(rays[2] == IntVector{1, 0});
  CHECK(nf.fan.max_cones().size() == 3);
  for (const ConeId& id : nf.fan.max_cones()) CHECK(nf.fan.cone(id).mult == 1);
  CHECK(fan_report(nf.fan).complete);
}

TEST_CASE("normal fan of the square splits into two projective lines") {
  NormalFan nf = normal_fan(unit_square());
  CHECK(nf.fan.rays().size() == 4);
  CHECK(nf.fan.max_cones().size() == 4);
  FanReport report = fan_report(nf.fan);
  CHECK(report.smooth);
  CHECK(report.complete);
}

TEST_CASE("normal fan of the spike triangle has one singular cone") {
  for (long m : {2l, 3l, 5l}) {
    NormalFan nf = normal_fan(spike_triangle(m));
    std::vector<IntVector> rays = nf.fan.rays();
    std::sort(rays.begin(), rays.end());
    CHECK(rays[0] == IntVector{-m, -1});
    CHECK(rays[1] == IntVector{0, 1});
    CHECK(rays[2] == IntVector{1, 0});
    Int worst = 1;
    for (const ConeId& id : nf.fan.max_cones())
      worst = std::max(worst, nf.fan.cone(id).mult);
    CHECK(worst == m);
  }
}

TEST_CASE("face to cone correspondence reverses dimension") {
  for (const LatticePolytope& p :
       {unit_square(), standard_triangle(), spike_triangle(3)}) {
    NormalFan nf = normal_fan(p);
    REQUIRE(nf.cone_of_face.size() == p.faces().size());
    for (std::size_t i = 0; i < p.faces().size(); ++i) {
      CHECK(nf.fan.has_cone(nf.cone_of_face[i]));
      CHECK(nf.cone_of_face[i].size() + p.faces()[i].dim == p.rank());
    }
  }
}

TEST_CASE("octahedron is not simple") {
  LatticePolytope oct = LatticePolytope::build(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(oct.facets().size() == 8);
  CHECK_THROWS_WITH_AS(normal_fan(oct), doctest::Contains("more than rank"), ToricError);
  // counting still works on the polytope itself
  CHECK(count_lattice_points(oct, 1) == 7);
}

TEST_CASE("polytope divisor coefficients") {
  LatticePolytope tri = standard_triangle();
  std::vector<Int> tri_coeffs = polytope_divisor(tri);
  REQUIRE(tri_coeffs.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    if (tri.facets()[k].normal == IntVector{-1, -1})
      CHECK(tri_coeffs[k] == 1);
    else
      CHECK(tri_coeffs[k] == 0);
  }

  LatticePolytope sq = unit_square();
  std::vector<Int> sq_coeffs = polytope_divisor(sq);
  Int nonzero = 0;
  for (std::size_t k = 0; k < sq_coeffs.size(); ++k) {
    if (sq_coeffs[k] == 0) continue;
    ++nonzero;
    CHECK(sq_coeffs[k] == 1);
    IntVector n = sq.facets()[k].normal;
    CHECK((n == IntVector{-1, 0} || n == IntVector{0, -1}));
  }
  CHECK(nonzero == 2);

  // dilation scales the divisor
  LatticePolytope sq3 = sq.dilate(3);
  std::vector<Int> scaled = polytope_divisor(sq3);
  REQUIRE(scaled.size() == sq_coeffs.size());
  for (std::size_t k = 0; k < scaled.size(); ++k) {
    CHECK(sq3.facets()[k].normal == sq.facets()[k].normal);
    CHECK(scaled[k] == 3 * sq_coeffs[k]);
  }
}

}  // TEST_SUITE
