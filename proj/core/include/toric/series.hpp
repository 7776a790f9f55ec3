#pragma once

#include <cstddef>
#include <vector>

#include "toric/cyclotomic.hpp"
#include "toric/intersect.hpp"

namespace toric {

// Truncated power series in one ray variable; index = exponent.  All entries
// share one cyclotomic order, and every series built here has the same length
// truncation + 1.
using Series = std::vector<CyclotomicScalar>;

Series series_mul(const Series& a, const Series& b);
Series series_inverse(const Series& a);  // constant term invertible

// The per-ray factor of a class formula, evaluated at character value a.
// The regular case is a == 1; otherwise 1 - a is invertible and the factor
// carrying a leading x picks up valuation one.
enum class FactorKind {
  Todd,                     // x / (1 - a e^{-x})
  ToddOmega,                // a x e^{-x} / (1 - a e^{-x})
  HirzebruchUnnormalized,   // x (1 + y a e^{-x}) / (1 - a e^{-x})
  HirzebruchNormalized,     // x (1 + y a e^{-x(1+y)}) / (1 - a e^{-x(1+y)})
  Correction,               // (1 + y a e^{-x(1+y)}) / (1 - a e^{-x(1+y)}), a != 1
  HalfL,                    // (x/2) / tanh(x/2), a == 1 only
};

Series lrr_factor(FactorKind kind, const CyclotomicScalar& a, std::size_t truncation);

// Expand prod_i factors[i](x_{rays[i]}) into a truncated polynomial in the
// ray variables.  rays must be strictly increasing; factors aligned with it.
CohomExpression expand_product(const std::vector<int>& rays,
                               const std::vector<const Series*>& factors,
                               std::size_t truncation, unsigned long order);

}  // namespace toric
