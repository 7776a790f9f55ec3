#include "toric/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Exact division of integer polynomials, ascending coefficients.
std::vector<Int> zpoly_divexact(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> rem(a), quo(a.size() - b.size() + 1, Int(0));
  const Int& lead = b.back();
  for (int k = static_cast<int>(rem.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
    Int q = rem[k] / lead;
    quo[k - (b.size() - 1)] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k - (b.size() - 1) + j] -= q * b[j];
  }
  for (const Int& r : rem)
    if (r != 0) fail(Err::InvalidInput, "inexact cyclotomic division");
  return quo;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned long n) {
  static std::map<unsigned long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (n == 0) fail(Err::InvalidInput, "cyclotomic order must be positive");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<Int>&(unsigned long)> get = [&](unsigned long m) -> const std::vector<Int>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<Int> num(m + 1, Int(0));  // x^m - 1
    num[0] = -1;
    num[m] = 1;
    for (unsigned long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      num = zpoly_divexact(num, get(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

CyclotomicScalar::CyclotomicScalar(unsigned long order, const YRational& constant) : order_(order) {
  if (!constant.is_zero()) c_.push_back(constant);
}

CyclotomicScalar CyclotomicScalar::root_of_unity(unsigned long order, long power) {
  CyclotomicScalar s(order);
  long k = power % static_cast<long>(order);
  if (k < 0) k += static_cast<long>(order);
  s.c_.assign(k + 1, YRational());
  s.c_[k] = YRational(Rational(1));
  s.reduce();
  return s;
}

YRational CyclotomicScalar::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return YRational();
  return c_[k];
}

void CyclotomicScalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void CyclotomicScalar::reduce() {
  const std::vector<Int>& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;  // deg Phi_N, monic
  if (c_.size() > deg) {
    for (int k = static_cast<int>(c_.size()) - 1; k >= static_cast<int>(deg); --k) {
      YRational q = c_[k];
      if (q.is_zero()) continue;
      c_[k] = YRational();
      for (std::size_t j = 0; j < deg; ++j) c_[k - deg + j] -= q * YRational(Rational(phi[j]));
    }
    c_.resize(deg);
  }
  trim();
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& o) {
  if (order_ != o.order_) fail(Err::InvalidInput, "mixed cyclotomic orders");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& o) {
  if (order_ != o.order_) fail(Err::InvalidInput, "mixed cyclotomic orders");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& o) {
  if (order_ != o.order_) fail(Err::InvalidInput, "mixed cyclotomic orders");
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<YRational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  reduce();
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const YRational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

namespace {

using FPoly = std::vector<YRational>;  // ascending, over the field Q(y)

int fdeg(const FPoly& p) { return static_cast<int>(p.size()) - 1; }

void ftrim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FPoly fsub_scaled(FPoly a, const FPoly& b, const YRational& s, int shift) {
  if (static_cast<int>(b.size()) + shift > static_cast<int>(a.size()))
    a.resize(b.size() + shift);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= s * b[j];
  ftrim(a);
  return a;
}

// a mod b and the quotient, over Q(y).
std::pair<FPoly, FPoly> fdivrem(FPoly a, const FPoly& b) {
  FPoly quo;
  ftrim(a);
  if (fdeg(a) >= fdeg(b)) quo.assign(fdeg(a) - fdeg(b) + 1, YRational());
  while (fdeg(a) >= fdeg(b)) {
    YRational q = a.back() / b.back();
    int shift = fdeg(a) - fdeg(b);
    quo[shift] = q;
    a = fsub_scaled(std::move(a), b, q, shift);
  }
  ftrim(quo);
  return {std::move(quo), std::move(a)};
}

}  // namespace

CyclotomicScalar CyclotomicScalar::inverse() const {
  if (is_zero()) fail(Err::InvalidInput, "inverse of zero cyclotomic scalar");
  // Extended Euclid for gcd(value, Phi_N) = 1 in Q(y)[zeta].
  const std::vector<Int>& phi_int = cyclotomic_polynomial(order_);
  FPoly r0(phi_int.size());
  for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = YRational(Rational(phi_int[i]));
  FPoly r1(c_.begin(), c_.end());
  FPoly s0{}, s1{YRational(Rational(1))};  // coefficients of the value in the Bezout identity
  while (fdeg(r1) > 0) {
    auto [q, r2] = fdivrem(std::move(r0), r1);
    FPoly s2 = s0;
    // s2 = s0 - q * s1
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      if (s1.size() + i > s2.size()) s2.resize(s1.size() + i);
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    ftrim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) fail(Err::InvalidInput, "cyclotomic scalar not invertible");
  YRational scale = r1[0].inverse();
  CyclotomicScalar out(order_);
  out.c_.resize(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) out.c_[i] = scale * s1[i];
  out.reduce();
  return out;
}

YRational CyclotomicScalar::rational_part() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      fail(Err::NotRational, "zeta^" + std::to_string(i) + " survives in " + str());
  return c_.empty() ? YRational() : c_[0];
}

CyclotomicScalar CyclotomicScalar::evaluate_y(const Rational& y0) const {
  CyclotomicScalar r(order_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = YRational(c_[i].evaluate(y0));
  r.trim();
  return r;
}

std::string CyclotomicScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[k].str() << ")";
    if (k >= 1) {
      out << "*z";
      if (k > 1) out << "^" << k;
    }
  }
  if (order_ > 1) out << " [z = zeta_" << order_ << "]";
  return out.str();
}

CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b) { return a *= b; }
CyclotomicScalar operator*(const YRational& s, CyclotomicScalar a) { return a *= s; }

}  // namespace toric
