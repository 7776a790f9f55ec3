#include "toric/rational.hpp"

#include <cctype>

#include "toric/errors.hpp"

namespace toric {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) fail(Err::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) fail(Err::InvalidInput, "not a rational: '" + s + "'");
  i = num_end;
  if (i < s.size()) {
    if (s[i] != '/' || digits(i + 1) != s.size() || i + 1 == s.size())
      fail(Err::InvalidInput, "not a rational: '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) fail(Err::InvalidInput, "not a rational: '" + s + "'");
  if (q.get_den() == 0) fail(Err::InvalidInput, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) fail(Err::InvalidInput, "zero to a negative power");
    Rational inv = Rational(base.get_den(), base.get_num());
    inv.canonicalize();
    return rational_pow(inv, -e);
  }
  Rational r(int_pow(Int(base.get_num()), static_cast<unsigned long>(e)),
             int_pow(Int(base.get_den()), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

Rational factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidInput: return "InvalidInput";
    case Err::NotRational: return "NotRational";
    case Err::NotDivisible: return "NotDivisible";
    case Err::NotPolynomial: return "NotPolynomial";
    case Err::NotSaturated: return "NotSaturated";
    case Err::DependentGenerators: return "DependentGenerators";
    case Err::NonPrimitiveRay: return "NonPrimitiveRay";
    case Err::NotSimplicial: return "NotSimplicial";
    case Err::BadIntersection: return "BadIntersection";
    case Err::NotStarClosed: return "NotStarClosed";
    case Err::NotSimple: return "NotSimple";
    case Err::NotFullDimensional: return "NotFullDimensional";
    case Err::RankTooHigh: return "RankTooHigh";
    case Err::NotComplete: return "NotComplete";
    case Err::NotPolygon: return "NotPolygon";
  }
  return "Unknown";
}

}  // namespace toric
