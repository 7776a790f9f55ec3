#include "toric/classes.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "toric/errors.hpp"
#include "toric/series.hpp"

namespace toric {

namespace {

unsigned long cone_order(const ConeData& data) {
  if (!data.mult.fits_ulong_p()) fail(Err::InvalidInput, "cone multiplicity too large");
  return data.mult.get_ui();
}

// zeta_den^num inside Q(zeta_order); den divides the group order by Lagrange.
CyclotomicScalar character_root(unsigned long order, std::pair<unsigned long, long> ch) {
  return CyclotomicScalar::root_of_unity(order, ch.second * static_cast<long>(order / ch.first));
}

// One class formula: per cone, per interior group element, the product over
// all rays of the kind's factor at that element's character, capped on [X].
CycleClass lrr_class(const Fan& fan, FactorKind kind) {
  const std::size_t d = fan.rank();
  std::vector<int> all_rays(fan.rays().size());
  std::iota(all_rays.begin(), all_rays.end(), 0);
  CycleClass total;
  for (const auto& [id, data] : fan.cones()) {
    std::vector<const GroupElement*> interior;
    for (const GroupElement& g : data.group.elements)
      if (g.interior) interior.push_back(&g);
    if (interior.empty()) continue;
    const unsigned long order = cone_order(data);
    const Series regular = lrr_factor(kind, CyclotomicScalar(order, YRational(1)), d);
    CohomExpression sum;
    sum.truncation = d;
    sum.order = order;
    for (const GroupElement* g : interior) {
      std::vector<Series> on_cone;
      on_cone.reserve(id.size());
      for (std::size_t j = 0; j < id.size(); ++j)
        on_cone.push_back(lrr_factor(kind, character_root(order, g->characters[j]), d));
      std::vector<const Series*> factors(all_rays.size(), &regular);
      for (std::size_t j = 0; j < id.size(); ++j) factors[id[j]] = &on_cone[j];
      sum = cohom_add(std::move(sum), expand_product(all_rays, factors, d, order));
    }
    // The interior elements of one cone are closed under Galois conjugation,
    // so the capped coefficients are rational; cohom_cap asserts it.
    total = cycle_add(std::move(total), cohom_cap(fan, sum, fundamental_class()));
  }
  return total;
}

void assert_polynomial(const CycleClass& c) {
  for (const auto& [id, v] : c.terms)
    if (!v.is_polynomial())
      fail(Err::NotPolynomial, "coefficient on " + cone_id_str(id) + " is not polynomial in y");
}

ConeSubset validated(const Fan& fan, const ConeSubset& subset) {
  return star_closed_subset(fan, std::vector<ConeId>(subset.cones.begin(), subset.cones.end()));
}

// Sum over the subset of pushed-forward canonical-sheaf Todd classes of the
// star fans, each term scaled by weight(dim O_sigma, homological degree).
template <typename Weight>
CycleClass orbit_sum(const Fan& fan, const ConeSubset& subset, Weight weight) {
  const std::size_t d = fan.rank();
  CycleClass total;
  for (const ConeId& sigma : subset.cones) {
    StarFan star = star_fan(fan, sigma);
    const std::size_t dim_orbit = d - sigma.size();
    CycleClass scaled;
    for (const auto& [tau, v] : todd_omega(star.fan).terms) {
      YRational s = v * weight(dim_orbit, star.fan.rank() - tau.size());
      if (!s.is_zero()) scaled.terms[tau] = s;
    }
    total = cycle_add(std::move(total), pushforward_from_star(star, scaled));
  }
  return total;
}

}  // namespace

const char* class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::ToddLRR: return "todd";
    case ClassKind::ToddOmega: return "todd-omega";
    case ClassKind::HirzebruchUnnormalized:
    case ClassKind::HirzebruchNormalized: return "hirzebruch";
    case ClassKind::MockHirzebruch: return "mock-hirzebruch";
    case ClassKind::ChernEhler: return "chern";
    case ClassKind::ToddSubset: return "todd-orbit";
    case ClassKind::TClass: return "t-class";
    case ClassKind::MockTClass: return "mock-t-class";
  }
  return "unknown";
}

bool class_kind_normalized(ClassKind kind) {
  return kind == ClassKind::HirzebruchNormalized || kind == ClassKind::MockHirzebruch ||
         kind == ClassKind::ChernEhler || kind == ClassKind::ToddSubset;
}

bool class_kind_takes_y(ClassKind kind) {
  return kind == ClassKind::HirzebruchUnnormalized || kind == ClassKind::HirzebruchNormalized ||
         kind == ClassKind::MockHirzebruch;
}

bool class_kind_takes_subset(ClassKind kind) {
  return kind == ClassKind::HirzebruchUnnormalized || kind == ClassKind::HirzebruchNormalized ||
         kind == ClassKind::ChernEhler || kind == ClassKind::ToddSubset;
}

YPolynomial chi_y_subset(const Fan& fan, const ConeSubset& subset) {
  const std::size_t d = fan.rank();
  YPolynomial minus_one_minus_y({Rational(-1), Rational(-1)});
  YPolynomial chi;
  for (const ConeId& sigma : subset.cones) {
    if (!fan.has_cone(sigma)) fail(Err::InvalidInput, "no such cone " + cone_id_str(sigma));
    chi += ypoly_pow(minus_one_minus_y, d - sigma.size());
  }
  return chi;
}

CycleClass todd_lrr(const Fan& fan) { return lrr_class(fan, FactorKind::Todd); }

CycleClass todd_omega(const Fan& fan) { return lrr_class(fan, FactorKind::ToddOmega); }

CycleClass hirzebruch_class(const Fan& fan, bool normalized) {
  CycleClass c = lrr_class(fan, normalized ? FactorKind::HirzebruchNormalized
                                           : FactorKind::HirzebruchUnnormalized);
  if (!normalized) {
    // (1+y)^(rank - #rays); rays short of the rank signal a torus factor,
    // each contributing one factor 1+y.
    long e = static_cast<long>(fan.rank()) - static_cast<long>(fan.rays().size());
    c = cycle_scale(yrational_pow(YRational(YPolynomial::one_plus_y()), e), std::move(c));
  }
  assert_polynomial(c);
  return c;
}

CycleClass normalize_class(const CycleClass& c, std::size_t rank) {
  const YRational upy{YPolynomial::one_plus_y()};
  CycleClass out;
  for (const auto& [id, v] : c.terms) {
    if (id.size() > rank) fail(Err::InvalidInput, "cone exceeds the stated rank");
    YRational q = v * yrational_pow(upy, -static_cast<long>(rank - id.size()));
    if (!q.is_polynomial())
      fail(Err::NotDivisible,
           "component on " + cone_id_str(id) + " is not divisible by its power of 1+y");
    if (!q.is_zero()) out.terms[id] = q;
  }
  return out;
}

CycleClass mock_hirzebruch(const Fan& fan, const std::optional<ConeId>& sigma) {
  const ConeId base = sigma.value_or(ConeId{});
  if (!fan.has_cone(base)) fail(Err::InvalidInput, "no such cone " + cone_id_str(base));
  const std::size_t t = fan.rank() - base.size();
  const Series factor = lrr_factor(FactorKind::HirzebruchNormalized,
                                   CyclotomicScalar(1, YRational(1)), t);
  std::vector<int> rays;
  for (int r = 0; r < static_cast<int>(fan.rays().size()); ++r)
    if (!std::binary_search(base.begin(), base.end(), r)) rays.push_back(r);
  std::vector<const Series*> factors(rays.size(), &factor);
  return cohom_cap(fan, expand_product(rays, factors, t, 1), make_cycle(base, YRational(1)));
}

CohomExpression correction_series(const Fan& fan, const ConeId& sigma) {
  const ConeData& data = fan.cone(sigma);
  if (data.mult <= 1) fail(Err::InvalidInput, "correction is defined on singular cones only");
  const std::size_t d = fan.rank();
  const unsigned long order = cone_order(data);
  CohomExpression sum;
  sum.truncation = d;
  sum.order = order;
  for (const GroupElement& g : data.group.elements) {
    if (!g.interior) continue;
    std::vector<Series> on_cone;
    on_cone.reserve(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j)
      on_cone.push_back(lrr_factor(FactorKind::Correction, character_root(order, g.characters[j]), d));
    std::vector<const Series*> factors(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) factors[j] = &on_cone[j];
    sum = cohom_add(std::move(sum), expand_product(sigma, factors, d, order));
  }
  sum = cohom_scale(CyclotomicScalar(order, YRational(Rational(1) / Rational(data.mult))),
                    std::move(sum));
  // Galois-stable sum: every coefficient is rational, so drop to order 1.
  CohomExpression out;
  out.truncation = d;
  out.order = 1;
  for (const auto& [mono, v] : sum.monomials)
    cohom_add_term(out, mono, CyclotomicScalar(1, v.rational_part()));
  return out;
}

CycleClass hirzebruch_decomposed(const Fan& fan) {
  CycleClass out = mock_hirzebruch(fan);
  for (const auto& [id, data] : fan.cones()) {
    if (data.mult <= 1) continue;
    out = cycle_add(std::move(out),
                    cohom_cap(fan, correction_series(fan, id), mock_hirzebruch(fan, id)));
  }
  assert_polynomial(out);
  return out;
}

CycleClass orbit_classes_subset(const Fan& fan, const ConeSubset& subset, bool normalized) {
  const ConeSubset checked = validated(fan, subset);
  const YPolynomial upy = YPolynomial::one_plus_y();
  if (normalized)
    return orbit_sum(fan, checked, [&upy](std::size_t dim_orbit, std::size_t k) {
      return YRational(ypoly_pow(upy, dim_orbit - k));
    });
  return orbit_sum(fan, checked, [&upy](std::size_t dim_orbit, std::size_t) {
    return YRational(ypoly_pow(upy, dim_orbit));
  });
}

CycleClass chern_ehler(const Fan& fan, const ConeSubset& subset) {
  const ConeSubset checked = validated(fan, subset);
  CycleClass out;
  for (const ConeId& sigma : checked.cones) out.terms[sigma] = YRational(1);
  return out;
}

CycleClass todd_subset(const Fan& fan, const ConeSubset& subset) {
  const ConeSubset checked = validated(fan, subset);
  return orbit_sum(fan, checked, [](std::size_t, std::size_t) { return YRational(1); });
}

CycleClass t_class(const Fan& fan) {
  // scale homological degree k by 2^(rank - k), i.e. the cone on sigma by 2^|sigma|
  CycleClass out;
  for (const auto& [id, v] : todd_lrr(fan).terms)
    out.terms[id] = v * YRational(Rational(int_pow(Int(2), id.size())));
  return out;
}

CycleClass mock_t_class(const Fan& fan) {
  CycleClass out;
  for (const auto& [id, data] : fan.cones())
    out = cycle_add(std::move(out), evaluate_class(mock_hirzebruch(fan, id), Rational(1)));
  return out;
}

TClassSuite t_class_suite(const Fan& fan) {
  const std::size_t d = fan.rank();
  TClassSuite suite;
  suite.t = t_class(fan);
  suite.t_mock = mock_t_class(fan);
  for (const auto& [id, data] : fan.cones()) {
    CohomExpression a;
    a.truncation = d;
    if (id.empty())
      a = cohom_one(d);
    else if (data.mult > 1)
      a = cohom_substitute_scaled(cohom_evaluate_y(correction_series(fan, id), Rational(1)),
                                  Rational(1, 2));
    suite.alpha.emplace(id, std::move(a));
  }
  return suite;
}

CycleClass evaluate_class(const CycleClass& c, const Rational& y0) {
  CycleClass out;
  for (const auto& [id, v] : c.terms) {
    Rational r = v.evaluate(y0);
    if (r != 0) out.terms[id] = YRational(r);
  }
  return out;
}

CycleClass compute_class(const Fan& fan, const ClassRequest& request) {
  if (request.y && !class_kind_takes_y(request.kind))
    fail(Err::InvalidInput,
         std::string(class_kind_name(request.kind)) + " does not take a y value");
  if (request.y && *request.y == Rational(-1) && !class_kind_normalized(request.kind))
    fail(Err::InvalidInput, "y = -1 specializes only normalized kinds");
  if (request.subset && !class_kind_takes_subset(request.kind))
    fail(Err::InvalidInput,
         std::string(class_kind_name(request.kind)) + " does not restrict to a subcomplex");
  std::optional<ConeSubset> subset;
  if (request.subset) subset = star_closed_subset(fan, *request.subset);
  CycleClass c;
  switch (request.kind) {
    case ClassKind::ToddLRR: c = todd_lrr(fan); break;
    case ClassKind::ToddOmega: c = todd_omega(fan); break;
    case ClassKind::HirzebruchUnnormalized:
      c = subset ? orbit_classes_subset(fan, *subset, false) : hirzebruch_class(fan, false);
      break;
    case ClassKind::HirzebruchNormalized:
      c = subset ? orbit_classes_subset(fan, *subset, true) : hirzebruch_class(fan, true);
      break;
    case ClassKind::MockHirzebruch: c = mock_hirzebruch(fan); break;
    case ClassKind::ChernEhler:
      c = chern_ehler(fan, subset ? *subset : full_subset(fan));
      break;
    case ClassKind::ToddSubset:
      c = todd_subset(fan, subset ? *subset : full_subset(fan));
      break;
    case ClassKind::TClass: c = t_class(fan); break;
    case ClassKind::MockTClass: c = mock_t_class(fan); break;
  }
  if (request.y) c = evaluate_class(c, *request.y);
  return c;
}

IdentityReport verify_identities(const Fan& fan) {
  const FanReport report = fan_report(fan);
  if (!report.complete) fail(Err::NotComplete, "identity verification needs a complete fan");
  const std::size_t d = fan.rank();
  const ConeSubset full = full_subset(fan);

  const CycleClass td = todd_lrr(fan);
  const CycleClass tdw = todd_omega(fan);
  const CycleClass tn = hirzebruch_class(fan, true);
  const CycleClass tu = hirzebruch_class(fan, false);
  const TClassSuite suite = t_class_suite(fan);

  // Per-orbit classes, already pushed into the ambient fan.
  struct OrbitData {
    ConeId id;
    CycleClass td;   // (k_sigma)_* td(V_sigma)
    CycleClass t1n;  // (k_sigma)_* of the normalized class at y = 1
    CycleClass t1u;  // (k_sigma)_* of the un-normalized class at y = 1
  };
  std::vector<OrbitData> orbits;
  std::map<ConeId, CycleClass> mock_t_orbit;  // (k_tau)_* of the mock class at y = 1
  for (const auto& [id, data] : fan.cones()) {
    StarFan star = star_fan(fan, id);
    OrbitData o;
    o.id = id;
    o.td = pushforward_from_star(star, todd_lrr(star.fan));
    o.t1n = pushforward_from_star(
        star, evaluate_class(hirzebruch_class(star.fan, true), Rational(1)));
    o.t1u = pushforward_from_star(
        star, evaluate_class(hirzebruch_class(star.fan, false), Rational(1)));
    orbits.push_back(std::move(o));
    mock_t_orbit.emplace(id, evaluate_class(mock_hirzebruch(fan, id), Rational(1)));
  }

  IdentityReport out;
  auto check_pair = [&](const char* name, const char* statement, const CycleClass& a,
                        const CycleClass& b) {
    PairingWitness w;
    IdentityResult r;
    r.name = name;
    r.statement = statement;
    r.pass = pairing_equal(fan, a, b, &w);
    if (!r.pass)
      r.witness = "cone " + cone_id_str(w.cone) + ": " + w.left.str() + " vs " + w.right.str();
    out.all_pass = out.all_pass && r.pass;
    out.identities.push_back(std::move(r));
  };
  auto scale_deg = [&](const CycleClass& c, auto factor_of_k) {
    CycleClass r;
    for (const auto& [id, v] : c.terms) {
      YRational s = v * factor_of_k(d - id.size());
      if (!s.is_zero()) r.terms[id] = s;
    }
    return r;
  };

  check_pair("todd-omega-duality", "td_k(X) = (-1)^(d-k) td_k(omega_X)", td,
             scale_deg(tdw, [&](std::size_t k) {
               return YRational(Rational((d - k) % 2 == 0 ? 1 : -1));
             }));

  {
    CycleClass rhs;
    for (const OrbitData& o : orbits)
      rhs = cycle_add(std::move(rhs),
                      scale_deg(o.td, [&](std::size_t) {
                        return YRational(Rational(o.id.size() % 2 == 0 ? 1 : -1));
                      }));
    check_pair("todd-omega-orbit-expansion",
               "td(omega_X) = sum_sigma (-1)^(dim sigma) (k_sigma)_* td(V_sigma)", tdw, rhs);
  }

  const CycleClass t1 = evaluate_class(tu, Rational(1));
  check_pair("t1-self-duality", "T_1(X) = (-1)^d T_1(X) with signs flipped by degree", t1,
             scale_deg(t1, [&](std::size_t k) {
               return YRational(Rational((d + k) % 2 == 0 ? 1 : -1));
             }));

  {
    CycleClass rhs;
    for (const OrbitData& o : orbits) {
      Rational w = rational_pow(Rational(-2), static_cast<long>(d - o.id.size()));
      if (d % 2 != 0) w = -w;
      rhs = cycle_add(std::move(rhs),
                      scale_deg(o.td, [&](std::size_t) { return YRational(w); }));
    }
    check_pair("t1-orbit-expansion",
               "T_1(X) = sum_sigma (-1)^d (-2)^(dim O_sigma) (k_sigma)_* td(V_sigma)", t1, rhs);
  }

  check_pair("singular-correction-decomposition",
             "normalized class = mock class + corrections on singular cones",
             hirzebruch_decomposed(fan), tn);

  check_pair("orbit-vs-group-sum-normalized",
             "sum_sigma (1+y)^(dim O_sigma - k) (k_sigma)_* td_k(omega_V) = normalized class",
             orbit_classes_subset(fan, full, true), tn);

  check_pair("orbit-vs-group-sum-unnormalized",
             "sum_sigma (1+y)^(dim O_sigma) (k_sigma)_* td(omega_V) = un-normalized class",
             orbit_classes_subset(fan, full, false), tu);

  {
    CycleClass rhs;
    for (const OrbitData& o : orbits) rhs = cycle_add(std::move(rhs), o.t1n);
    check_pair("t-class-orbit-sum", "T(X) = sum_sigma (k_sigma)_* That_1(V_sigma)", suite.t, rhs);
  }

  {
    CycleClass rhs;
    for (const OrbitData& o : orbits) rhs = cycle_add(std::move(rhs), o.t1u);
    const YRational two_d{Rational(int_pow(Int(2), d))};
    check_pair("t-class-todd-scaling", "2^d td(X) = sum_sigma (k_sigma)_* T_1(V_sigma)",
               scale_deg(td, [&](std::size_t) { return two_d; }), rhs);
  }

  {
    CycleClass rhs = suite.t_mock;
    for (const ConeId& sigma : report.singular_cones) {
      CohomExpression a1 = cohom_evaluate_y(correction_series(fan, sigma), Rational(1));
      CycleClass orbit_mock;
      for (const auto& [tau, cls] : mock_t_orbit)
        if (std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end()))
          orbit_mock = cycle_add(std::move(orbit_mock), cls);
      rhs = cycle_add(std::move(rhs), cohom_cap(fan, a1, orbit_mock));
    }
    check_pair("t-class-mock-correction",
               "T(X) = sum_sigma A_1(sigma) . (k_sigma)_* T^mock(V_sigma)", suite.t, rhs);
  }

  {
    // td(X) = sum_sigma alpha(sigma) . sum_{tau >= sigma} mult(tau)
    //         prod_{rho in tau} (x_rho/2) prod_{rho notin tau} (x_rho/2)/tanh(x_rho/2) cap [X]
    const Series half_l = lrr_factor(FactorKind::HalfL, CyclotomicScalar(1, YRational(1)), d);
    Series half_x(d + 1, CyclotomicScalar(1));
    if (d >= 1) half_x[1] = CyclotomicScalar(1, YRational(Rational(1, 2)));
    std::vector<int> all_rays(fan.rays().size());
    std::iota(all_rays.begin(), all_rays.end(), 0);
    CycleClass rhs;
    for (const auto& [sigma, a] : suite.alpha) {
      if (a.monomials.empty()) continue;
      CohomExpression bracket;
      bracket.truncation = d;
      for (const auto& [tau, data] : fan.cones()) {
        if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) continue;
        std::vector<const Series*> factors(all_rays.size(), &half_l);
        for (int r : tau) factors[r] = &half_x;
        bracket = cohom_add(std::move(bracket),
                            cohom_scale(CyclotomicScalar(1, YRational(Rational(data.mult))),
                                        expand_product(all_rays, factors, d, 1)));
      }
      rhs = cycle_add(std::move(rhs),
                      cohom_cap(fan, cohom_product(a, bracket), fundamental_class()));
    }
    check_pair("half-integer-euler-maclaurin",
               "td(X) = sum_sigma alpha(sigma) . sum_{tau >= sigma} mult(tau) "
               "prod(x/2) prod (x/2)/tanh(x/2) cap [X]",
               td, rhs);
  }

  {
    IdentityResult r;
    r.name = "degree-is-chi-y";
    r.statement = "integral of the normalized class = chi_y genus";
    const YRational lhs = degree(fan, tn);
    const YRational rhs{chi_y_subset(fan, full)};
    r.pass = lhs == rhs;
    if (!r.pass) r.witness = lhs.str() + " vs " + rhs.str();
    out.all_pass = out.all_pass && r.pass;
    out.identities.push_back(std::move(r));
  }

  check_pair("todd-at-y0", "normalized class at y = 0 is the Todd class",
             evaluate_class(tn, Rational(0)), td);

  check_pair("chern-at-ym1", "normalized class at y = -1 is the orbit-cycle sum",
             evaluate_class(tn, Rational(-1)), chern_ehler(fan, full));

  if (report.smooth)
    check_pair("mock-exact-when-smooth", "mock class = normalized class on smooth fans",
               mock_hirzebruch(fan), tn);

  return out;
}

}  // namespace toric
