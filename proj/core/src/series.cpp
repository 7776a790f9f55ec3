#include "toric/series.hpp"

#include "toric/errors.hpp"

namespace toric {

namespace {

Rational sign_over_factorial(std::size_t k) {
  Rational r = Rational(1) / factorial(k);
  return (k % 2 == 0) ? r : Rational(-r);
}

Series shift_by_x(const Series& s, unsigned long order) {
  Series r(s.size(), CyclotomicScalar(order));
  for (std::size_t k = 1; k < s.size(); ++k) r[k] = s[k - 1];
  return r;
}

}  // namespace

Series series_mul(const Series& a, const Series& b) {
  if (a.size() != b.size()) fail(Err::InvalidInput, "series length mismatch");
  Series r(a.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    CyclotomicScalar acc = a[0] * b[k];
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    r[k] = acc;
  }
  return r;
}

Series series_inverse(const Series& a) {
  if (a.empty() || a[0].is_zero()) fail(Err::InvalidInput, "series constant term not invertible");
  Series r(a.size());
  r[0] = a[0].inverse();
  for (std::size_t k = 1; k < a.size(); ++k) {
    CyclotomicScalar acc = a[0];
    acc -= a[0];  // zero of the right order
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j].is_zero() || r[k - j].is_zero()) continue;
      acc += a[j] * r[k - j];
    }
    r[k] = -(r[0] * acc);
  }
  return r;
}

Series lrr_factor(FactorKind kind, const CyclotomicScalar& a, std::size_t truncation) {
  const unsigned long order = a.order();
  const std::size_t n = truncation + 1;
  auto sc = [order](const YRational& v) { return CyclotomicScalar(order, v); };
  const CyclotomicScalar one = sc(YRational(1));
  const YPolynomial upy = YPolynomial::one_plus_y();

  if (a == one) {
    // v = (1 - e^{-x}) / x, invertible with constant term 1.
    Series v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = sc(YRational(-sign_over_factorial(k + 1)));
    switch (kind) {
      case FactorKind::Todd:
        return series_inverse(v);
      case FactorKind::ToddOmega: {
        Series e(n);
        for (std::size_t k = 0; k < n; ++k) e[k] = sc(YRational(sign_over_factorial(k)));
        return series_mul(e, series_inverse(v));
      }
      case FactorKind::HirzebruchUnnormalized: {
        Series num(n);
        for (std::size_t k = 0; k < n; ++k) {
          YPolynomial p = YPolynomial::monomial(sign_over_factorial(k), 1);
          if (k == 0) p += YPolynomial(1L);
          num[k] = sc(YRational(p));
        }
        return series_mul(num, series_inverse(v));
      }
      case FactorKind::HirzebruchNormalized: {
        // Both numerator and denominator carry one factor 1+y cancelled off,
        // keeping every coefficient in Q[y].
        Series num(n), w(n);
        for (std::size_t k = 0; k < n; ++k) {
          num[k] = (k == 0)
                       ? one
                       : sc(YRational(YPolynomial::monomial(sign_over_factorial(k), 1) *
                                      ypoly_pow(upy, k - 1)));
          w[k] = sc(YRational(-sign_over_factorial(k + 1) * ypoly_pow(upy, k)));
        }
        return series_mul(num, series_inverse(w));
      }
      case FactorKind::HalfL: {
        // (x/2)/tanh(x/2) = (x/2)(1 + e^{-x})/(1 - e^{-x})
        Series num(n);
        for (std::size_t k = 0; k < n; ++k) {
          Rational c = sign_over_factorial(k);
          if (k == 0) c += 1;
          num[k] = sc(YRational(c / Rational(2)));
        }
        return series_mul(num, series_inverse(v));
      }
      case FactorKind::Correction:
        fail(Err::InvalidInput, "correction factor needs a nontrivial character");
    }
  }

  // a != 1: 1 - a e^{-cx} has invertible constant term 1 - a.
  auto denominator = [&](bool with_y) {
    Series den(n);
    for (std::size_t k = 0; k < n; ++k) {
      YPolynomial p = with_y ? sign_over_factorial(k) * ypoly_pow(upy, k)
                             : YPolynomial(sign_over_factorial(k));
      den[k] = -(a * sc(YRational(p)));
      if (k == 0) den[k] += one;
    }
    return den;
  };
  switch (kind) {
    case FactorKind::Todd:
      return shift_by_x(series_inverse(denominator(false)), order);
    case FactorKind::ToddOmega: {
      Series num(n);
      for (std::size_t k = 0; k < n; ++k) num[k] = a * sc(YRational(sign_over_factorial(k)));
      return shift_by_x(series_mul(num, series_inverse(denominator(false))), order);
    }
    case FactorKind::HirzebruchUnnormalized: {
      Series num(n);
      for (std::size_t k = 0; k < n; ++k) {
        num[k] = a * sc(YRational(YPolynomial::monomial(sign_over_factorial(k), 1)));
        if (k == 0) num[k] += one;
      }
      return shift_by_x(series_mul(num, series_inverse(denominator(false))), order);
    }
    case FactorKind::HirzebruchNormalized:
    case FactorKind::Correction: {
      Series num(n);
      for (std::size_t k = 0; k < n; ++k) {
        num[k] = a * sc(YRational(YPolynomial::monomial(sign_over_factorial(k), 1) *
                                  ypoly_pow(upy, k)));
        if (k == 0) num[k] += one;
      }
      Series ratio = series_mul(num, series_inverse(denominator(true)));
      return kind == FactorKind::Correction ? ratio : shift_by_x(ratio, order);
    }
    case FactorKind::HalfL:
      fail(Err::InvalidInput, "half-L factor is only taken at the trivial character");
  }
  fail(Err::InvalidInput, "unknown factor kind");
}

CohomExpression expand_product(const std::vector<int>& rays,
                               const std::vector<const Series*>& factors,
                               std::size_t truncation, unsigned long order) {
  if (rays.size() != factors.size()) fail(Err::InvalidInput, "factor count mismatch");
  CohomExpression out;
  out.truncation = truncation;
  out.order = order;
  std::vector<int> mono;
  mono.reserve(truncation);
  // Depth-first over exponent tuples with total degree <= truncation; the
  // monomial stays sorted because rays is increasing.
  auto dfs = [&](auto&& self, std::size_t i, std::size_t used,
                 const CyclotomicScalar& coeff) -> void {
    if (i == rays.size()) {
      cohom_add_term(out, mono, coeff);
      return;
    }
    const Series& s = *factors[i];
    for (std::size_t k = 0; used + k <= truncation && k < s.size(); ++k) {
      if (s[k].is_zero()) continue;
      CyclotomicScalar c = coeff;
      c *= s[k];
      mono.insert(mono.end(), k, rays[i]);
      self(self, i + 1, used + k, c);
      mono.resize(mono.size() - k);
    }
  };
  dfs(dfs, 0, 0, CyclotomicScalar(order, YRational(1)));
  return out;
}

}  // namespace toric
