#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toric/cyclotomic.hpp"
#include "toric/fan.hpp"
#include "toric/ypoly.hpp"

namespace toric {

// Formal sum of orbit closures [V_sigma].  The coefficient on sigma sits in
// homological degree rank - dim sigma.  The representation is not canonical
// (rationally equivalent cycles differ term-wise); compare with pairing_equal.
struct CycleClass {
  std::map<ConeId, YRational> terms;  // absent cones carry zero

  bool is_zero() const { return terms.empty(); }
};

CycleClass make_cycle(ConeId sigma, YRational coefficient);
CycleClass fundamental_class();
CycleClass cycle_add(CycleClass a, const CycleClass& b);
CycleClass cycle_scale(const YRational& s, CycleClass c);

// Terms of homological degree k only.
CycleClass cycle_component(const Fan& fan, const CycleClass& c, std::size_t k);

// Truncated commutative polynomial in the ray variables x_rho, with
// coefficients in a fixed cyclotomic extension of Q(y); order 1 is plain Q(y).
struct CohomExpression {
  std::size_t truncation = 0;
  unsigned long order = 1;
  std::map<std::vector<int>, CyclotomicScalar> monomials;  // sorted ray multisets
};

CohomExpression cohom_one(std::size_t truncation, unsigned long order = 1);
void cohom_add_term(CohomExpression& e, std::vector<int> monomial, const CyclotomicScalar& s);
CohomExpression cohom_add(CohomExpression a, const CohomExpression& b);
CohomExpression cohom_scale(const CyclotomicScalar& s, CohomExpression e);
CohomExpression cohom_product(const CohomExpression& a, const CohomExpression& b);

// Reinterpret in the cyclotomic field of the given order; the input must be
// rational (order 1) or already of that order.
CohomExpression cohom_lift(CohomExpression e, unsigned long order);

// Substitute a rational number for y in every coefficient.
CohomExpression cohom_evaluate_y(const CohomExpression& e, const Rational& y0);

// Substitute x_rho -> s * x_rho: scales each degree-k monomial by s^k.
CohomExpression cohom_substitute_scaled(const CohomExpression& e, const Rational& s);

// Q-divisor supported on rays.
struct DivisorClass {
  std::map<int, Rational> coefficients;
};

// Multiplication by the divisor x_rho.  When rho is not a ray of sigma this
// is transverse: the term moves to the cone spanned by sigma and rho, scaled
// by the multiplicity ratio, or vanishes when there is no such cone.  When
// rho is a ray of sigma, the term is rewritten through a linear function
// vanishing on the other rays of sigma before multiplying.
CycleClass divisor_times_cycle(const Fan& fan, int ray, const ConeId& sigma,
                               const YRational& c);
CycleClass divisor_times_cycle(const Fan& fan, int ray, const CycleClass& c);

// expr cap c: expand monomial by monomial, applying one divisor factor at a
// time in ascending ray order; applications exceeding the dimension of the
// target term are dropped.  Coefficients must come out rational.
CycleClass cohom_cap(const Fan& fan, const CohomExpression& expr, const CycleClass& c);

// Truncated exponential sum_{k<=t} D^k / k!.
CohomExpression exp_divisor(const DivisorClass& d, std::size_t truncation);

// Sum of the coefficients on maximal cones (top orbit closures are reduced
// points).  Requires a complete fan.
YRational degree(const Fan& fan, const CycleClass& c);

struct PairingWitness {
  ConeId cone;
  YRational left;
  YRational right;
};

// Equality through pairings: for every cone mu compare the degree of
// (prod_{rho in mu(1)} x_rho) cap c on both sides.  Requires a complete fan.
bool pairing_equal(const Fan& fan, const CycleClass& a, const CycleClass& b,
                   PairingWitness* witness = nullptr);

// Transfer coefficients from star cones to the ambient cones they index;
// homological degrees match by construction.
CycleClass pushforward_from_star(const StarFan& star, const CycleClass& c);

}  // namespace toric
