#include "toric/counting.hpp"

#include <array>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

Rational constant_of(const YRational& v) {
  const YPolynomial& p = v.as_polynomial();
  if (p.degree() > 0) fail(Err::NotPolynomial, "expected a y-free value");
  return p.coeff(0);
}

YPolynomial one_plus_y_pow(int k) {
  YPolynomial r(1);
  for (int i = 0; i < k; ++i) r *= YPolynomial::one_plus_y();
  return r;
}

DivisorClass ample_divisor(const LatticePolytope& p) {
  DivisorClass d;
  const std::vector<Int> coeffs = polytope_divisor(p);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    d.coefficients[static_cast<int>(i)] = Rational(coeffs[i]);
  return d;
}

// The degree-k slice of the truncated exponential, i.e. [D]^k / k!.
CohomExpression homogeneous_part(const CohomExpression& e, std::size_t k) {
  CohomExpression out;
  out.truncation = e.truncation;
  out.order = e.order;
  for (const auto& [mono, coeff] : e.monomials)
    if (mono.size() == k) out.monomials.emplace(mono, coeff);
  return out;
}

}  // namespace

std::vector<Int> ehrhart_bruteforce(const LatticePolytope& p,
                                    unsigned long max_dilate) {
  std::vector<Int> counts;
  counts.reserve(max_dilate + 1);
  for (unsigned long l = 0; l <= max_dilate; ++l)
    counts.push_back(count_lattice_points(p, l));
  return counts;
}

EhrhartResult ehrhart_via_classes(const LatticePolytope& p,
                                  std::optional<unsigned long> max_dilate) {
  const NormalFan nf = normal_fan(p);
  const std::size_t d = p.rank();
  const CycleClass td = todd_lrr(nf.fan);
  const CohomExpression expd = exp_divisor(ample_divisor(p), d);

  EhrhartResult out;
  for (std::size_t k = 0; k <= d; ++k) {
    // Only the degree-k Todd component survives against [D]^k / k!.
    const CohomExpression part = homogeneous_part(expd, k);
    out.coefficients.push_back(
        constant_of(degree(nf.fan, cohom_cap(nf.fan, part, td))));
  }

  const unsigned long top =
      max_dilate.value_or(static_cast<unsigned long>(d) + 2);
  out.brute_counts = ehrhart_bruteforce(p, top);
  for (unsigned long l = 0; l <= top; ++l) {
    Rational value(0);
    Rational power(1);
    for (std::size_t k = 0; k <= d; ++k) {
      value += out.coefficients[k] * power;
      power *= Rational(l);
    }
    out.residuals.push_back(value - Rational(out.brute_counts[l]));
  }
  return out;
}

WeightedCountReport weighted_count_identity(
    const LatticePolytope& p,
    const std::optional<PolytopalSubcomplex>& subcomplex, WeightedMode mode) {
  const NormalFan nf = normal_fan(p);
  const Fan& fan = nf.fan;
  const std::size_t d = p.rank();
  const CohomExpression expd = exp_divisor(ample_divisor(p), d);

  WeightedCountReport out;
  if (mode == WeightedMode::Dual) {
    if (subcomplex) {
      std::set<std::size_t> members;
      for (std::size_t fi : subcomplex->faces) {
        if (fi >= p.faces().size())
          fail(Err::InvalidInput, "face index out of range");
        members.insert(fi);
      }
      if (members.size() != p.faces().size())
        fail(Err::InvalidInput, "dual mode runs over the full face lattice");
    }
    Rational lhs(0);
    for (std::size_t fi = 0; fi < p.faces().size(); ++fi) {
      const long codim = static_cast<long>(d) - p.faces()[fi].dim;
      lhs += rational_pow(make_rational(-1, 2), codim) *
             Rational(count_lattice_points(p, fi, 1, false));
    }
    const CycleClass t1 = evaluate_class(hirzebruch_class(fan, false), Rational(1));
    const Rational rhs = rational_pow(make_rational(1, 2), static_cast<long>(d)) *
                         constant_of(degree(fan, cohom_cap(fan, expd, t1)));
    out.lhs = YPolynomial(lhs);
    out.rhs = YPolynomial(rhs);
    out.equal = (out.lhs == out.rhs);
    return out;
  }

  const PolytopalSubcomplex sub = subcomplex ? *subcomplex : full_subcomplex(p);
  YPolynomial lhs;
  std::vector<ConeId> ids;
  for (std::size_t fi : sub.faces) {
    if (fi >= p.faces().size()) fail(Err::InvalidInput, "face index out of range");
    ids.push_back(nf.cone_of_face[fi]);
    lhs += Rational(count_lattice_points(p, fi, 1, true)) *
           one_plus_y_pow(p.faces()[fi].dim);
  }
  const ConeSubset subset = star_closed_subset(fan, ids);
  const CycleClass ty = orbit_classes_subset(fan, subset, false);
  out.lhs = lhs;
  out.rhs = degree(fan, cohom_cap(fan, expd, ty)).as_polynomial();
  out.equal = (out.lhs == out.rhs);
  return out;
}

SheafEulerTable hirzebruch_polynomial(const Fan& fan, const DivisorClass& dv) {
  const CycleClass ty = hirzebruch_class(fan, false);
  const YRational chi =
      degree(fan, cohom_cap(fan, exp_divisor(dv, fan.rank()), ty));
  SheafEulerTable out;
  out.chi_y = chi.as_polynomial();
  for (std::size_t q = 0; q <= fan.rank(); ++q)
    out.per_p.push_back(out.chi_y.coeff(static_cast<int>(q)));
  return out;
}

SheafEulerTable hirzebruch_polynomial(const LatticePolytope& p) {
  const NormalFan nf = normal_fan(p);
  return hirzebruch_polynomial(nf.fan, ample_divisor(p));
}

PickReport pick_report(const LatticePolytope& p) {
  if (p.rank() != 2) fail(Err::NotPolygon, "expected a lattice polygon");

  PickReport out;
  const std::vector<IntVector>& vs = p.vertices();
  const std::size_t n = vs.size();
  out.vertex_count = n;

  // Each vertex lies on exactly two edges; walk the boundary cycle once to
  // put the vertices in cyclic order for the shoelace sum.
  std::vector<std::array<int, 2>> edges_at(n, {-1, -1});
  for (std::size_t e = 0; e < p.facets().size(); ++e)
    for (int v : p.facets()[e].vertices)
      edges_at[v][edges_at[v][0] < 0 ? 0 : 1] = static_cast<int>(e);

  std::vector<int> order;
  order.reserve(n);
  int cur = 0;
  int edge = edges_at[0][0];
  for (std::size_t step = 0; step < n; ++step) {
    order.push_back(cur);
    const std::vector<int>& ev = p.facets()[edge].vertices;
    cur = (ev[0] == cur) ? ev[1] : ev[0];
    edge = (edges_at[cur][0] == edge) ? edges_at[cur][1] : edges_at[cur][0];
  }
  Int twice_area(0);
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector& a = vs[order[i]];
    const IntVector& b = vs[order[(i + 1) % n]];
    twice_area += a[0] * b[1] - b[0] * a[1];
  }
  out.area = make_rational(abs(twice_area), 2);

  out.total_points = count_lattice_points(p, 1);
  out.interior_points = count_lattice_points(p, 1, true);
  out.boundary_points = out.total_points - out.interior_points;

  const Int edge_interior = out.boundary_points - Int(n);
  const YPolynomial upy = YPolynomial::one_plus_y();
  const YPolynomial upy2 = upy * upy;
  const Rational vcount(static_cast<long>(n));
  const YPolynomial chi_y = upy2 - vcount * upy + YPolynomial(vcount);
  const YPolynomial half_one_minus_y2(std::vector<Rational>{
      make_rational(1, 2), Rational(0), make_rational(-1, 2)});

  out.ypick_lhs = Rational(out.interior_points) * upy2 +
                  Rational(edge_interior) * upy + YPolynomial(vcount);
  out.ypick_rhs = out.area * upy2 +
                  Rational(out.boundary_points) * half_one_minus_y2 + chi_y;
  out.ypick_equal = (out.ypick_lhs == out.ypick_rhs);
  out.classical_pick =
      (Rational(out.total_points) ==
       out.area + make_rational(out.boundary_points, 2) + Rational(1));
  return out;
}

}  // namespace toric
