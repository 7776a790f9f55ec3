#pragma once

#include <vector>

#include "toric/rational.hpp"

namespace toric {

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;  // row major

IntMatrix identity_matrix(std::size_t n);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
IntVector matrix_apply(const IntMatrix& a, const IntVector& v);  // a * v, v as column
Int dot(const IntVector& a, const IntVector& b);

// U * A * V = D with D diagonal, d1 | d2 | ..., U and V unimodular.
struct SmithDecomposition {
  IntMatrix u, d, v;
  std::size_t rank = 0;  // number of nonzero diagonal entries
};

// Deterministic pivoting: smallest absolute nonzero entry, ties by position.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Unimodular inverse; input must be square with det +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Hermite-reduced basis of span(vectors) cap Z^d.  Row echelon: positive
// pivots, entries above a pivot reduced into [0, pivot).
IntMatrix saturation_basis(const IntMatrix& vectors);

// Basis of the saturated sublattice plus a completion to a basis of Z^d;
// rows 0..k-1 span the sublattice, all d rows span Z^d.
IntMatrix completed_basis(const IntMatrix& saturated);

struct QuotientMap {
  std::size_t ambient_rank = 0;
  IntMatrix kernel;      // saturated basis, k rows
  IntMatrix projection;  // (d-k) x d, surjective onto Z^(d-k), kills kernel
  IntMatrix section;     // d x (d-k), projection * section = identity
};

// N -> N / N_kernel for a saturated kernel; errors NotSaturated on torsion.
QuotientMap quotient_map(const IntMatrix& kernel, std::size_t rank);

struct ParallelotopePoint {
  IntVector point;
  std::vector<Rational> lambda;  // coordinates in the generators, each in [0, 1)
  bool interior = false;         // all lambda strictly positive
};

// All lattice points sum(lambda_i u_i), 0 <= lambda_i < 1, solved exactly.
// Count equals the index of the generator lattice in its saturation.
std::vector<ParallelotopePoint> parallelotope_points(const IntMatrix& generators);

struct PrimitiveDual {
  IntVector m;   // ambient coordinates, extended by zero off span(generators)
  Int pairing;   // <m, u_j> > 0
};

// m_j primitive in the dual of the saturation, <m_j, u_i> = 0 for i != j.
std::vector<PrimitiveDual> primitive_duals(const IntMatrix& generators);

// Rank of the rows over Q.
std::size_t matrix_rank(const IntMatrix& a);

// Solve sum(x_i rows_i) = target over Q; empty result when inconsistent.
// Rows must be linearly independent.
std::vector<Rational> solve_in_span(const IntMatrix& rows, const IntVector& target, bool* ok);

}  // namespace toric
