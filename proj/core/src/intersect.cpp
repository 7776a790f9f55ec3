#include "toric/intersect.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

CycleClass make_cycle(ConeId sigma, YRational coefficient) {
  CycleClass c;
  if (!coefficient.is_zero()) c.terms.emplace(std::move(sigma), std::move(coefficient));
  return c;
}

CycleClass fundamental_class() { return make_cycle({}, YRational(1)); }

CycleClass cycle_add(CycleClass a, const CycleClass& b) {
  for (const auto& [id, v] : b.terms) {
    auto it = a.terms.find(id);
    if (it == a.terms.end()) {
      a.terms.emplace(id, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) a.terms.erase(it);
    }
  }
  return a;
}

CycleClass cycle_scale(const YRational& s, CycleClass c) {
  if (s.is_zero()) return {};
  for (auto& [id, v] : c.terms) v *= s;
  return c;
}

CycleClass cycle_component(const Fan& fan, const CycleClass& c, std::size_t k) {
  CycleClass out;
  for (const auto& [id, v] : c.terms)
    if (fan.rank() - id.size() == k) out.terms.emplace(id, v);
  return out;
}

CohomExpression cohom_one(std::size_t truncation, unsigned long order) {
  CohomExpression e;
  e.truncation = truncation;
  e.order = order;
  e.monomials.emplace(std::vector<int>{}, CyclotomicScalar(order, YRational(1)));
  return e;
}

void cohom_add_term(CohomExpression& e, std::vector<int> monomial, const CyclotomicScalar& s) {
  if (monomial.size() > e.truncation) return;
  if (s.order() != e.order) fail(Err::InvalidInput, "scalar order mismatch");
  std::sort(monomial.begin(), monomial.end());
  auto it = e.monomials.find(monomial);
  if (it == e.monomials.end()) {
    if (!s.is_zero()) e.monomials.emplace(std::move(monomial), s);
  } else {
    it->second += s;
    if (it->second.is_zero()) e.monomials.erase(it);
  }
}

CohomExpression cohom_add(CohomExpression a, const CohomExpression& b) {
  if (a.order != b.order) fail(Err::InvalidInput, "mixed scalar orders");
  a.truncation = std::min(a.truncation, b.truncation);
  for (const auto& [mono, s] : b.monomials) cohom_add_term(a, mono, s);
  // re-truncate in case the bound shrank
  for (auto it = a.monomials.begin(); it != a.monomials.end();)
    it = it->first.size() > a.truncation ? a.monomials.erase(it) : std::next(it);
  return a;
}

CohomExpression cohom_scale(const CyclotomicScalar& s, CohomExpression e) {
  if (s.order() != e.order) fail(Err::InvalidInput, "scalar order mismatch");
  if (s.is_zero()) return CohomExpression{e.truncation, e.order, {}};
  for (auto& [mono, v] : e.monomials) v *= s;
  for (auto it = e.monomials.begin(); it != e.monomials.end();)
    it = it->second.is_zero() ? e.monomials.erase(it) : std::next(it);
  return e;
}

CohomExpression cohom_product(const CohomExpression& a, const CohomExpression& b) {
  if (a.order != b.order) fail(Err::InvalidInput, "mixed scalar orders");
  CohomExpression out;
  out.truncation = std::min(a.truncation, b.truncation);
  out.order = a.order;
  for (const auto& [ma, sa] : a.monomials)
    for (const auto& [mb, sb] : b.monomials) {
      if (ma.size() + mb.size() > out.truncation) continue;
      std::vector<int> mono = ma;
      mono.insert(mono.end(), mb.begin(), mb.end());
      cohom_add_term(out, std::move(mono), sa * sb);
    }
  return out;
}

CohomExpression cohom_lift(CohomExpression e, unsigned long order) {
  if (e.order == order) return e;
  if (e.order != 1) fail(Err::InvalidInput, "cannot lift between cyclotomic orders");
  CohomExpression out;
  out.truncation = e.truncation;
  out.order = order;
  for (const auto& [mono, s] : e.monomials)
    out.monomials.emplace(mono, CyclotomicScalar(order, s.rational_part()));
  return out;
}

CohomExpression cohom_evaluate_y(const CohomExpression& e, const Rational& y0) {
  CohomExpression out;
  out.truncation = e.truncation;
  out.order = e.order;
  for (const auto& [mono, s] : e.monomials) {
    CyclotomicScalar v = s.evaluate_y(y0);
    if (!v.is_zero()) out.monomials.emplace(mono, v);
  }
  return out;
}

CohomExpression cohom_substitute_scaled(const CohomExpression& e, const Rational& s) {
  CohomExpression out;
  out.truncation = e.truncation;
  out.order = e.order;
  for (const auto& [mono, v] : e.monomials) {
    CyclotomicScalar w = v;
    w *= YRational(rational_pow(s, static_cast<long>(mono.size())));
    if (!w.is_zero()) out.monomials.emplace(mono, w);
  }
  return out;
}

CycleClass divisor_times_cycle(const Fan& fan, int ray, const ConeId& sigma,
                               const YRational& c) {
  if (!fan.has_cone(sigma)) fail(Err::InvalidInput, "unknown cone");
  if (ray < 0 || static_cast<std::size_t>(ray) >= fan.rays().size())
    fail(Err::InvalidInput, "ray index out of range");
  if (c.is_zero()) return {};

  if (!std::binary_search(sigma.begin(), sigma.end(), ray)) {
    ConeId tau = sigma;
    tau.insert(std::lower_bound(tau.begin(), tau.end(), ray), ray);
    if (!fan.has_cone(tau)) return {};
    Rational ratio(fan.cone(sigma).mult, fan.cone(tau).mult);
    ratio.canonicalize();
    return make_cycle(std::move(tau), c * YRational(ratio));
  }

  // x_rho with rho a ray of sigma: replace by the linear function m with
  // <m, u_rho> = 1 vanishing on the other rays of sigma (and on the fixed
  // complement of its span), then push the cross terms transversally.
  const ConeData& data = fan.cone(sigma);
  std::size_t j = static_cast<std::size_t>(
      std::lower_bound(sigma.begin(), sigma.end(), ray) - sigma.begin());
  const PrimitiveDual& dual = data.duals[j];
  CycleClass out;
  for (std::size_t r = 0; r < fan.rays().size(); ++r) {
    if (std::binary_search(sigma.begin(), sigma.end(), static_cast<int>(r))) continue;
    Rational pairing(dot(dual.m, fan.rays()[r]), dual.pairing);
    pairing.canonicalize();
    if (pairing == 0) continue;
    CycleClass cross =
        divisor_times_cycle(fan, static_cast<int>(r), sigma, c * YRational(-pairing));
    out = cycle_add(std::move(out), cross);
  }
  return out;
}

CycleClass divisor_times_cycle(const Fan& fan, int ray, const CycleClass& c) {
  CycleClass out;
  for (const auto& [sigma, v] : c.terms)
    out = cycle_add(std::move(out), divisor_times_cycle(fan, ray, sigma, v));
  return out;
}

CycleClass cohom_cap(const Fan& fan, const CohomExpression& expr, const CycleClass& c) {
  std::map<ConeId, CyclotomicScalar> acc;
  for (const auto& [mono, s] : expr.monomials) {
    if (s.is_zero()) continue;
    for (const auto& [sigma, coeff] : c.terms) {
      if (mono.size() > fan.rank() - sigma.size()) continue;
      CycleClass cur = make_cycle(sigma, coeff);
      for (int ray : mono) {
        cur = divisor_times_cycle(fan, ray, cur);
        if (cur.is_zero()) break;
      }
      for (const auto& [tau, v] : cur.terms) {
        CyclotomicScalar term = s;
        term *= v;
        auto it = acc.find(tau);
        if (it == acc.end())
          acc.emplace(tau, std::move(term));
        else
          it->second += term;
      }
    }
  }
  CycleClass out;
  for (const auto& [tau, s] : acc) {
    YRational v = s.rational_part();
    if (!v.is_zero()) out.terms.emplace(tau, std::move(v));
  }
  return out;
}

CohomExpression exp_divisor(const DivisorClass& d, std::size_t truncation) {
  CohomExpression linear;
  linear.truncation = truncation;
  linear.order = 1;
  for (const auto& [ray, coeff] : d.coefficients)
    cohom_add_term(linear, {ray}, CyclotomicScalar(1, YRational(coeff)));
  CohomExpression out = cohom_one(truncation);
  CohomExpression power = out;
  for (std::size_t k = 1; k <= truncation; ++k) {
    power = cohom_product(power, linear);
    if (power.monomials.empty()) break;
    power = cohom_scale(CyclotomicScalar(1, YRational(Rational(1, static_cast<long>(k)))),
                        std::move(power));
    out = cohom_add(std::move(out), power);
  }
  return out;
}

namespace {

YRational degree_unchecked(const Fan& fan, const CycleClass& c) {
  YRational sum;
  for (const auto& [sigma, v] : c.terms)
    if (sigma.size() == fan.rank()) sum += v;
  return sum;
}

}  // namespace

YRational degree(const Fan& fan, const CycleClass& c) {
  if (!fan_report(fan).complete) fail(Err::NotComplete, "degree needs a complete fan");
  return degree_unchecked(fan, c);
}

bool pairing_equal(const Fan& fan, const CycleClass& a, const CycleClass& b,
                   PairingWitness* witness) {
  if (!fan_report(fan).complete)
    fail(Err::NotComplete, "pairing comparison needs a complete fan");
  for (const auto& [mu, data] : fan.cones()) {
    (void)data;
    CycleClass ca = a, cb = b;
    for (int ray : mu) {
      ca = divisor_times_cycle(fan, ray, ca);
      cb = divisor_times_cycle(fan, ray, cb);
    }
    YRational left = degree_unchecked(fan, ca);
    YRational right = degree_unchecked(fan, cb);
    if (left != right) {
      if (witness != nullptr) *witness = PairingWitness{mu, left, right};
      return false;
    }
  }
  return true;
}

CycleClass pushforward_from_star(const StarFan& star, const CycleClass& c) {
  CycleClass out;
  for (const auto& [id, v] : c.terms) {
    auto it = star.cone_to_ambient.find(id);
    if (it == star.cone_to_ambient.end())
      fail(Err::InvalidInput, "cycle term does not live on the star fan");
    auto slot = out.terms.find(it->second);
    if (slot == out.terms.end())
      out.terms.emplace(it->second, v);
    else
      slot->second += v;
  }
  return out;
}

}  // namespace toric
