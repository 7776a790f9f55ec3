#pragma once

#include <gmpxx.h>

#include <string>

namespace toric {

using Int = mpz_class;
using Rational = mpq_class;

// Canonicalizing constructor; fixes sign of the denominator.
Rational make_rational(const Int& num, const Int& den);

// "a" or "a/b", no whitespace; denominator positive, fraction reduced.
std::string rational_str(const Rational& q);

// Accepts an optional leading '-', digits, and an optional "/digits" part.
Rational parse_rational(const std::string& s);

Int int_pow(const Int& base, unsigned long e);
Rational rational_pow(const Rational& base, long e);  // e < 0 needs base != 0
Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

}  // namespace toric
