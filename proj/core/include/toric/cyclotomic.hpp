#pragma once

#include <string>
#include <vector>

#include "toric/ypoly.hpp"

namespace toric {

// Phi_N as integer coefficients, ascending.
const std::vector<Int>& cyclotomic_polynomial(unsigned long n);

// Element of Q(zeta_N)(y), stored as a polynomial in zeta over YRational
// reduced mod Phi_N.  Order 1 is plain Q(y).
class CyclotomicScalar {
public:
  CyclotomicScalar() : order_(1) {}
  explicit CyclotomicScalar(unsigned long order) : order_(order) {}
  CyclotomicScalar(unsigned long order, const YRational& constant);

  static CyclotomicScalar root_of_unity(unsigned long order, long power);

  unsigned long order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  int zeta_degree() const { return static_cast<int>(c_.size()) - 1; }
  YRational coeff(int k) const;

  CyclotomicScalar operator-() const;
  CyclotomicScalar& operator+=(const CyclotomicScalar& o);
  CyclotomicScalar& operator-=(const CyclotomicScalar& o);
  CyclotomicScalar& operator*=(const CyclotomicScalar& o);
  CyclotomicScalar& operator*=(const YRational& s);
  CyclotomicScalar inverse() const;

  // The value as an element of Q(y); errors NotRational when a positive
  // zeta-power survives reduction.
  YRational rational_part() const;

  // Substitute a rational value for y in every coefficient.
  CyclotomicScalar evaluate_y(const Rational& y0) const;

  std::string str() const;

  bool operator==(const CyclotomicScalar& o) const { return order_ == o.order_ && c_ == o.c_; }
  bool operator!=(const CyclotomicScalar& o) const { return !(*this == o); }

private:
  void reduce();
  void trim();
  unsigned long order_;
  std::vector<YRational> c_;  // ascending zeta powers, degree < deg Phi_N
};

CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b);
CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b);
CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b);
CyclotomicScalar operator*(const YRational& s, CyclotomicScalar a);

}  // namespace toric
