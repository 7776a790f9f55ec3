#include "toric/classes.hpp"

#include <doctest.h>

#include "test_util.hpp"
#include "toric/errors.hpp"
#include "toric/series.hpp"

using namespace toric;
using namespace toric::testutil;

namespace {

// the isolated-singular-point family: one cone of index m, the rest smooth
Fan wps11m(long m) {
  return build_fan(2, {ivec({1, 0}), ivec({0, 1}), ivec({-1, -m})}, {{0, 1}, {1, 2}, {0, 2}});
}

// a single singular cone, not complete
Fan cone_fan_12() { return build_fan(2, {ivec({1, 0}), ivec({1, 2})}, {{0, 1}}); }

YRational coeff(const CycleClass& c, const ConeId& id) {
  auto it = c.terms.find(id);
  return it == c.terms.end() ? YRational() : it->second;
}

YPolynomial ypoly(std::vector<Rational> cs) { return YPolynomial(std::move(cs)); }

ConeSubset boundary_subset(const Fan& fan) {
  ConeSubset s;
  for (const auto& [id, data] : fan.cones())
    if (!id.empty()) s.cones.insert(id);
  return s;
}

YRational series_coeff(const Series& s, std::size_t k) { return s[k].rational_part(); }

}  // namespace

TEST_SUITE_BEGIN("classes");

TEST_CASE("ray factor series") {
  const CyclotomicScalar one(1, YRational(1));

  Series todd = lrr_factor(FactorKind::Todd, one, 3);
  CHECK(series_coeff(todd, 0) == YRational(1));
  CHECK(series_coeff(todd, 1) == YRational(Rational(1, 2)));
  CHECK(series_coeff(todd, 2) == YRational(Rational(1, 12)));
  CHECK(series_coeff(todd, 3) == YRational(0));

  Series omega = lrr_factor(FactorKind::ToddOmega, one, 2);
  CHECK(series_coeff(omega, 0) == YRational(1));
  CHECK(series_coeff(omega, 1) == YRational(Rational(-1, 2)));
  CHECK(series_coeff(omega, 2) == YRational(Rational(1, 12)));

  Series tu = lrr_factor(FactorKind::HirzebruchUnnormalized, one, 2);
  CHECK(series_coeff(tu, 0) == YRational(ypoly({1, 1})));
  CHECK(series_coeff(tu, 1) == YRational(ypoly({Rational(1, 2), Rational(-1, 2)})));
  CHECK(series_coeff(tu, 2) == YRational(ypoly({Rational(1, 12), Rational(1, 12)})));

  Series tn = lrr_factor(FactorKind::HirzebruchNormalized, one, 2);
  CHECK(series_coeff(tn, 0) == YRational(1));
  CHECK(series_coeff(tn, 1) == YRational(ypoly({Rational(1, 2), Rational(-1, 2)})));
  CHECK(series_coeff(tn, 2) == YRational(ypoly({Rational(1, 12), Rational(1, 6), Rational(1, 12)})));

  Series half = lrr_factor(FactorKind::HalfL, one, 3);
  CHECK(series_coeff(half, 0) == YRational(1));
  CHECK(series_coeff(half, 1) == YRational(0));
  CHECK(series_coeff(half, 2) == YRational(Rational(1, 12)));
  CHECK(series_coeff(half, 3) == YRational(0));

  // x/(1 + e^{-x}) at the order-two character
  Series sing = lrr_factor(FactorKind::Todd, CyclotomicScalar::root_of_unity(2, 1), 3);
  CHECK(series_coeff(sing, 0) == YRational(0));
  CHECK(series_coeff(sing, 1) == YRational(Rational(1, 2)));
  CHECK(series_coeff(sing, 2) == YRational(Rational(1, 4)));
  CHECK(series_coeff(sing, 3) == YRational(0));

  CHECK_THROWS_AS(lrr_factor(FactorKind::Correction, one, 2), ToricError);
  CHECK_THROWS_AS(lrr_factor(FactorKind::HalfL, CyclotomicScalar::root_of_unity(2, 1), 2),
                  ToricError);
}

TEST_CASE("chi_y genus of orbit unions") {
  Fan p2 = fix_p2();
  CHECK(chi_y_subset(p2, full_subset(p2)) == ypoly({1, -1, 1}));

  ConeSubset torus;
  torus.cones.insert(ConeId{});
  CHECK(chi_y_subset(p2, torus) == ypoly({1, 2, 1}));

  CHECK(chi_y_subset(p2, boundary_subset(p2)) == ypoly({0, -3}));

  Fan pp = fix_p1xp1();
  CHECK(chi_y_subset(pp, full_subset(pp)) == ypoly({1, -2, 1}));
}

TEST_CASE("todd class counts lattice points") {
  Fan p2 = fix_p2();
  CycleClass td = todd_lrr(p2);
  CHECK(coeff(td, {}) == YRational(1));
  for (int r = 0; r < 3; ++r) CHECK(coeff(td, {r}) == YRational(Rational(1, 2)));
  CHECK(degree(p2, td) == YRational(1));

  // points of the unimodular triangle: integral of e^D against td
  DivisorClass d;
  d.coefficients[2] = Rational(1);
  CHECK(degree(p2, cohom_cap(p2, exp_divisor(d, 2), td)) == YRational(3));

  // the index-two triangle with vertices (0,0), (1,0), (0,2) has 4 points
  Fan t2 = fix_spike(2);
  DivisorClass d2;
  d2.coefficients[2] = Rational(2);
  CHECK(degree(t2, cohom_cap(t2, exp_divisor(d2, 2), todd_lrr(t2))) == YRational(4));

  for (const Fan& f : {fix_p2(), fix_p1xp1(), fix_spike(2), fix_spike(3), fix_wps121(),
                       fix_cube3(), fix_p3()})
    CHECK(degree(f, todd_lrr(f)) == YRational(1));
}

TEST_CASE("canonical-sheaf todd counts interior points") {
  Fan pp = fix_p1xp1();
  CycleClass tdw = todd_omega(pp);
  CHECK(coeff(tdw, {}) == YRational(1));
  CHECK(coeff(tdw, {0}) == YRational(Rational(-1, 2)));

  DivisorClass unit_square;  // [0,1]^2 against the rays (1,0),(0,1),(-1,0),(0,-1)
  unit_square.coefficients[2] = Rational(1);
  unit_square.coefficients[3] = Rational(1);
  CHECK(degree(pp, cohom_cap(pp, exp_divisor(unit_square, 2), tdw)) == YRational(0));

  DivisorClass two_square;
  two_square.coefficients[2] = Rational(2);
  two_square.coefficients[3] = Rational(2);
  CHECK(degree(pp, cohom_cap(pp, exp_divisor(two_square, 2), tdw)) == YRational(1));

  Fan p2 = fix_p2();
  CycleClass tdw2 = todd_omega(p2);
  DivisorClass tri, tri3;
  tri.coefficients[2] = Rational(1);
  tri3.coefficients[2] = Rational(3);
  CHECK(degree(p2, cohom_cap(p2, exp_divisor(tri, 2), tdw2)) == YRational(0));
  CHECK(degree(p2, cohom_cap(p2, exp_divisor(tri3, 2), tdw2)) == YRational(1));
}

TEST_CASE("hirzebruch classes") {
  Fan p2 = fix_p2();
  CycleClass tn = hirzebruch_class(p2, true);
  CHECK(coeff(tn, {}) == YRational(1));
  for (int r = 0; r < 3; ++r)
    CHECK(coeff(tn, {r}) == YRational(ypoly({Rational(1, 2), Rational(-1, 2)})));

  CycleClass tu = hirzebruch_class(p2, false);
  CHECK(coeff(tu, {}) == YRational(ypoly({1, 2, 1})));
  CHECK(pairing_equal(p2, normalize_class(tu, 2), tn));
  CHECK(degree(p2, evaluate_class(tu, Rational(1))) == YRational(1));  // signature

  // the integral of the normalized class is the chi_y genus
  for (const Fan& f : {fix_p2(), fix_p1xp1(), fix_spike(2), fix_spike(3), fix_wps121(),
                       fix_cube3(), fix_p3()})
    CHECK(degree(f, hirzebruch_class(f, true)) == YRational(chi_y_subset(f, full_subset(f))));
}

TEST_CASE("hirzebruch classes with a torus factor") {
  Fan half_plane = build_fan(2, {ivec({1, 0})}, {{0}});
  CycleClass tu = hirzebruch_class(half_plane, false);
  CHECK(tu.terms.size() == 2);
  CHECK(coeff(tu, {}) == YRational(ypoly({1, 2, 1})));
  CHECK(coeff(tu, {0}) == YRational(ypoly({Rational(1, 2), 0, Rational(-1, 2)})));

  CycleClass tn = hirzebruch_class(half_plane, true);
  CHECK(coeff(tn, {}) == YRational(1));
  CHECK(coeff(tn, {0}) == YRational(ypoly({Rational(1, 2), Rational(-1, 2)})));

  CycleClass via_psi = normalize_class(tu, 2);
  CHECK(via_psi.terms == tn.terms);
}

TEST_CASE("normalization grading") {
  CycleClass c = make_cycle({}, YRational(ypoly({1, 2, 1})));
  CycleClass n = normalize_class(c, 2);
  CHECK(coeff(n, {}) == YRational(1));

  CycleClass pt = make_cycle({0, 1}, YRational(ypoly({3, 7})));
  CHECK(normalize_class(pt, 2).terms == pt.terms);  // degree 0 untouched

  CHECK_THROWS_AS(normalize_class(fundamental_class(), 1), ToricError);
  try {
    normalize_class(fundamental_class(), 1);
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotDivisible);
  }
}

TEST_CASE("mock classes") {
  Fan pp = fix_p1xp1();
  CHECK(pairing_equal(pp, mock_hirzebruch(pp), hirzebruch_class(pp, true)));

  // mock Chern: each orbit weighted by the inverse multiplicity
  Fan t2 = fix_spike(2);
  CycleClass chern_mock = evaluate_class(mock_hirzebruch(t2), Rational(-1));
  for (const auto& [id, data] : t2.cones())
    CHECK(coeff(chern_mock, id) == YRational(Rational(1) / Rational(data.mult)));

  Fan p2 = fix_p2();
  CycleClass pt = mock_hirzebruch(p2, ConeId{0, 1});
  CHECK(pt.terms.size() == 1);
  CHECK(coeff(pt, {0, 1}) == YRational(1));

  CycleClass line = mock_hirzebruch(p2, ConeId{1});
  CHECK(coeff(line, {1}) == YRational(1));
  CHECK(coeff(line, {0, 1}) == YRational(ypoly({Rational(1, 2), Rational(-1, 2)})));
  const ConeId ray1{1};
  for (const auto& [id, v] : line.terms)
    CHECK(std::includes(id.begin(), id.end(), ray1.begin(), ray1.end()));
}

TEST_CASE("correction series") {
  Fan wedge = cone_fan_12();
  CohomExpression a = correction_series(wedge, {0, 1});
  REQUIRE(a.monomials.count({}) == 1);
  CHECK(a.monomials.at({}).rational_part() ==
        YRational(ypoly({Rational(1, 8), Rational(-1, 4), Rational(1, 8)})));

  CHECK(cohom_evaluate_y(a, Rational(1)).monomials.count({}) == 0);

  CohomExpression at_minus_one = cohom_evaluate_y(a, Rational(-1));
  REQUIRE(at_minus_one.monomials.size() == 1);
  CHECK(at_minus_one.monomials.at({}).rational_part() == YRational(Rational(1, 2)));

  // order five: four interior elements out of multiplicity five
  Fan t5 = fix_spike(5);
  CohomExpression a5 = cohom_evaluate_y(correction_series(t5, {1, 2}), Rational(-1));
  REQUIRE(a5.monomials.size() == 1);
  CHECK(a5.monomials.at({}).rational_part() == YRational(Rational(4, 5)));

  Fan p2 = fix_p2();
  CHECK_THROWS_AS(correction_series(p2, {0, 1}), ToricError);
}

TEST_CASE("decomposition into mock class plus corrections") {
  Fan pp = fix_p1xp1();
  CHECK(hirzebruch_decomposed(pp).terms == mock_hirzebruch(pp).terms);

  Fan t2 = fix_spike(2);
  CHECK(pairing_equal(t2, hirzebruch_decomposed(t2), hirzebruch_class(t2, true)));

  // isolated singular point: the correction is a pure point term whose
  // value is (1/m) sum over nontrivial m-th roots of ((1+lambda y)/(1-lambda))^2
  struct Expected {
    long m;
    Rational at_one;   // -(m-1)(m-2)/(3m)
    Rational at_zero;  // -(m-1)(m-5)/(12m)
  };
  for (const Expected& e : {Expected{2, Rational(0), Rational(1, 8)},
                            Expected{3, Rational(-2, 9), Rational(1, 9)},
                            Expected{5, Rational(-4, 5), Rational(0)}}) {
    Fan f = wps11m(e.m);
    CycleClass diff =
        cycle_add(hirzebruch_decomposed(f), cycle_scale(YRational(-1), mock_hirzebruch(f)));
    REQUIRE(diff.terms.size() == 1);
    YRational v = coeff(diff, {0, 2});
    CHECK(v.evaluate(Rational(1)) == e.at_one);
    CHECK(v.evaluate(Rational(0)) == e.at_zero);
    CHECK(pairing_equal(f, hirzebruch_decomposed(f), hirzebruch_class(f, true)));
  }
}

TEST_CASE("orbit-sum classes over star-closed subsets") {
  Fan p2 = fix_p2();
  ConeSubset full = full_subset(p2);
  CycleClass orbit_n = orbit_classes_subset(p2, full, true);
  CycleClass orbit_u = orbit_classes_subset(p2, full, false);
  CHECK(pairing_equal(p2, orbit_n, hirzebruch_class(p2, true)));
  CHECK(pairing_equal(p2, orbit_u, hirzebruch_class(p2, false)));
  CHECK(degree(p2, evaluate_class(orbit_n, Rational(-1))) == YRational(3));

  ConeSubset boundary = boundary_subset(p2);
  CycleClass orbit_b = orbit_classes_subset(p2, boundary, true);
  CHECK(degree(p2, orbit_b) == YRational(chi_y_subset(p2, boundary)));
  CHECK(degree(p2, orbit_b).evaluate(Rational(0)) == 0);

  CycleClass chern_b = chern_ehler(p2, boundary);
  CHECK(degree(p2, chern_b) == YRational(3));
  CHECK(pairing_equal(p2, evaluate_class(orbit_b, Rational(-1)), chern_b));

  CHECK(pairing_equal(p2, todd_subset(p2, full), todd_lrr(p2)));
  CHECK(degree(p2, todd_subset(p2, boundary)) == YRational(0));

  ConeSubset open_ray;
  open_ray.cones.insert(ConeId{0});
  CHECK_THROWS_AS(orbit_classes_subset(p2, open_ray, true), ToricError);
  try {
    orbit_classes_subset(p2, open_ray, true);
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotStarClosed);
  }
}

TEST_CASE("t-class suite") {
  Fan p2 = fix_p2();
  TClassSuite suite = t_class_suite(p2);
  CHECK(coeff(suite.t, {}) == YRational(1));
  for (int r = 0; r < 3; ++r) CHECK(coeff(suite.t, {r}) == YRational(1));
  CHECK(degree(p2, suite.t) == YRational(4));

  CycleClass explicit_t = make_cycle({}, YRational(1));
  for (int r = 0; r < 3; ++r) explicit_t = cycle_add(explicit_t, make_cycle({r}, YRational(1)));
  explicit_t = cycle_add(explicit_t, make_cycle({0, 1}, YRational(4)));
  CHECK(pairing_equal(p2, suite.t, explicit_t));

  CHECK(pairing_equal(p2, suite.t, suite.t_mock));  // smooth: no corrections
  CHECK(suite.alpha.at({}).monomials.size() == 1);
  CHECK(suite.alpha.at({}).monomials.at({}).rational_part() == YRational(1));
  CHECK(suite.alpha.at({0}).monomials.empty());
  CHECK(suite.alpha.at({0, 1}).monomials.empty());

  // singular cone: alpha = (1/2) tanh(x1/2) tanh(x2/2), leading term x1 x2 / 8
  Fan t2 = fix_spike(2);
  TClassSuite s2 = t_class_suite(t2);
  const CohomExpression& a = s2.alpha.at({1, 2});
  CHECK(a.monomials.count({}) == 0);
  CHECK(a.monomials.at({1, 2}).rational_part() == YRational(Rational(1, 8)));
}

TEST_CASE("identity suite passes on complete fixtures") {
  for (const Fan& f : {fix_p2(), fix_p1xp1(), fix_spike(2), fix_wps121(), wps11m(3),
                       fix_spike(5), fix_cube3(), fix_p3()}) {
    IdentityReport report = verify_identities(f);
    CHECK(report.identities.size() >= 14);
    for (const IdentityResult& r : report.identities) {
      INFO(r.name, ": ", r.statement, " ", r.witness);
      CHECK(r.pass);
    }
    CHECK(report.all_pass);
  }

  CHECK_THROWS_AS(verify_identities(cone_fan_12()), ToricError);
  try {
    verify_identities(cone_fan_12());
  } catch (const ToricError& e) {
    CHECK(e.code() == Err::NotComplete);
  }
}

TEST_CASE("class requests") {
  Fan p2 = fix_p2();

  ClassRequest todd_req;
  todd_req.kind = ClassKind::ToddLRR;
  CHECK(compute_class(p2, todd_req).terms == todd_lrr(p2).terms);

  ClassRequest bad_y = todd_req;
  bad_y.y = Rational(1);
  CHECK_THROWS_AS(compute_class(p2, bad_y), ToricError);

  ClassRequest chern_req;
  chern_req.kind = ClassKind::HirzebruchNormalized;
  chern_req.y = Rational(-1);
  CHECK(pairing_equal(p2, compute_class(p2, chern_req), chern_ehler(p2, full_subset(p2))));

  ClassRequest bad_minus_one;
  bad_minus_one.kind = ClassKind::HirzebruchUnnormalized;
  bad_minus_one.y = Rational(-1);
  CHECK_THROWS_AS(compute_class(p2, bad_minus_one), ToricError);

  ClassRequest bad_subset;
  bad_subset.kind = ClassKind::MockHirzebruch;
  bad_subset.subset = std::vector<ConeId>{{}};
  CHECK_THROWS_AS(compute_class(p2, bad_subset), ToricError);

  std::vector<ConeId> boundary_ids;
  for (const ConeId& id : boundary_subset(p2).cones) boundary_ids.push_back(id);
  ClassRequest chern_boundary;
  chern_boundary.kind = ClassKind::ChernEhler;
  chern_boundary.subset = boundary_ids;
  CHECK(compute_class(p2, chern_boundary).terms == chern_ehler(p2, boundary_subset(p2)).terms);

  ClassRequest t_req;
  t_req.kind = ClassKind::TClass;
  CHECK(compute_class(p2, t_req).terms == t_class(p2).terms);
}

TEST_SUITE_END();
