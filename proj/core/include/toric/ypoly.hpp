#pragma once

#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Polynomial in y over Q, coefficients ascending, trailing zeros trimmed.
class YPolynomial {
public:
  static constexpr int kZeroDegree = -1;

  YPolynomial() = default;
  explicit YPolynomial(const Rational& constant);
  explicit YPolynomial(long constant);
  explicit YPolynomial(std::vector<Rational> coeffs);

  static YPolynomial y();
  static YPolynomial monomial(const Rational& coeff, int k);
  static YPolynomial one_plus_y();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  YPolynomial operator-() const;
  YPolynomial& operator+=(const YPolynomial& o);
  YPolynomial& operator-=(const YPolynomial& o);
  YPolynomial& operator*=(const YPolynomial& o);
  YPolynomial& operator*=(const Rational& s);

  Rational evaluate(const Rational& y0) const;

  // Canonical form: ascending powers, "a/b" rationals, e.g. "1 - y + y^2".
  std::string str() const;

  bool operator==(const YPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const YPolynomial& o) const { return !(*this == o); }

private:
  void trim();
  std::vector<Rational> c_;
};

YPolynomial operator+(YPolynomial a, const YPolynomial& b);
YPolynomial operator-(YPolynomial a, const YPolynomial& b);
YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
YPolynomial operator*(const Rational& s, YPolynomial a);

YPolynomial ypoly_pow(const YPolynomial& p, unsigned long e);

// Inverse of YPolynomial::str; accepts that canonical shape only.
YPolynomial parse_ypoly(const std::string& s);

// quotient, remainder with deg rem < deg b; b nonzero.
std::pair<YPolynomial, YPolynomial> ypoly_divrem(const YPolynomial& a, const YPolynomial& b);

// Monic gcd; gcd(0, 0) = 0.
YPolynomial ypoly_gcd(YPolynomial a, YPolynomial b);

// q with q * (1+y)^k = p; errors NotDivisible if the division leaves a remainder.
YPolynomial exact_divide_by_unit_power(const YPolynomial& p, unsigned int k);

// Fraction num/den with gcd(num, den) = 1 and den monic.
class YRational {
public:
  YRational() : num_(), den_(Rational(1)) {}
  YRational(const YPolynomial& p) : num_(p), den_(Rational(1)) {}
  YRational(const Rational& q) : num_(q), den_(Rational(1)) {}
  YRational(long n) : num_(Rational(n)), den_(Rational(1)) {}
  YRational(YPolynomial num, YPolynomial den);

  const YPolynomial& num() const { return num_; }
  const YPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // The value as a polynomial; errors NotPolynomial when the reduced denominator is not 1.
  const YPolynomial& as_polynomial() const;

  YRational operator-() const;
  YRational& operator+=(const YRational& o);
  YRational& operator-=(const YRational& o);
  YRational& operator*=(const YRational& o);
  YRational& operator/=(const YRational& o);
  YRational inverse() const;

  Rational evaluate(const Rational& y0) const;  // den(y0) must be nonzero

  std::string str() const;

  bool operator==(const YRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const YRational& o) const { return !(*this == o); }

private:
  void reduce();
  YPolynomial num_, den_;
};

YRational operator+(YRational a, const YRational& b);
YRational operator-(YRational a, const YRational& b);
YRational operator*(YRational a, const YRational& b);
YRational operator/(YRational a, const YRational& b);

YRational yrational_pow(const YRational& v, long e);

}  // namespace toric
