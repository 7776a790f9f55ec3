#include "toric/lattice.hpp"

#include <algorithm>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::size_t rows(const IntMatrix& a) { return a.size(); }
std::size_t cols(const IntMatrix& a) { return a.empty() ? 0 : a[0].size(); }

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Gaussian elimination over Q; returns reduced matrix and pivot columns.
struct Echelon {
  std::vector<std::vector<Rational>> m;
  std::vector<std::size_t> pivot_cols;
};

Echelon echelon_form(std::vector<std::vector<Rational>> m) {
  Echelon e;
  std::size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    std::swap(m[r], m[piv]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < nc; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(rows(a), IntVector(cols(b), Int(0)));
  for (std::size_t i = 0; i < rows(a); ++i)
    for (std::size_t k = 0; k < cols(a); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols(b); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IntVector matrix_apply(const IntMatrix& a, const IntVector& v) {
  IntVector r(rows(a), Int(0));
  for (std::size_t i = 0; i < rows(a); ++i)
    for (std::size_t j = 0; j < cols(a); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  std::size_t nr = rows(a), nc = cols(a);
  SmithDecomposition s;
  s.d = a;
  s.u = identity_matrix(nr);
  s.v = identity_matrix(nc);
  IntMatrix& d = s.d;

  auto negate_row = [&](std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : s.u[i]) x = -x;
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < nr; ++r) std::swap(d[r][i], d[r][j]);
    for (std::size_t r = 0; r < nc; ++r) std::swap(s.v[r][i], s.v[r][j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < nc; ++j) d[dst][j] += f * d[src][j];
    for (std::size_t j = 0; j < nr; ++j) s.u[dst][j] += f * s.u[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < nr; ++i) d[i][dst] += f * d[i][src];
    for (std::size_t i = 0; i < nc; ++i) s.v[i][dst] += f * s.v[i][src];
  };

  std::size_t t = 0;
  for (; t < std::min(nr, nc); ++t) {
    for (;;) {
      // Smallest absolute nonzero entry in the trailing block, ties by position.
      std::size_t pi = nr, pj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          if (d[i][j] == 0) continue;
          if (pi == nr || abs_int(d[i][j]) < abs_int(d[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
      if (pi == nr) goto done;
      swap_rows(t, pi);
      swap_cols(t, pj);
      if (d[t][t] < 0) negate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (d[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        add_row(i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (d[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        add_col(j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block for the divisibility chain.
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc && divides; ++j)
          if (d[i][j] % d[t][t] != 0) {
            add_row(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    s.rank = t + 1;
  }
done:
  return s;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  std::size_t n = rows(a);
  if (n != cols(a)) fail(Err::InvalidInput, "inverse of non-square matrix");
  SmithDecomposition s = smith_normal_form(a);
  for (std::size_t i = 0; i < n; ++i)
    if (s.d[i][i] != 1) fail(Err::InvalidInput, "matrix is not unimodular");
  return matrix_product(s.v, s.u);
}

namespace {

// Unique row Hermite form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_rows(IntMatrix m) {
  std::size_t nr = rows(m), nc = cols(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    // Euclid down the column until one nonzero entry remains at row r.
    for (;;) {
      std::size_t piv = nr;
      for (std::size_t i = r; i < nr; ++i) {
        if (m[i][c] == 0) continue;
        if (piv == nr || abs_int(m[i][c]) < abs_int(m[piv][c])) piv = i;
      }
      if (piv == nr) break;
      std::swap(m[r], m[piv]);
      if (m[r][c] < 0)
        for (auto& x : m[r]) x = -x;
      bool done = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (m[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < nr && m[r][c] != 0) {
      for (std::size_t i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = 0; j < nc; ++j) m[i][j] -= q * m[r][j];
      }
      ++r;
    }
  }
  m.resize(r);
  return m;
}

}  // namespace

IntMatrix saturation_basis(const IntMatrix& vectors) {
  if (vectors.empty()) return {};
  SmithDecomposition s = smith_normal_form(vectors);
  IntMatrix vinv = unimodular_inverse(s.v);
  IntMatrix basis(vinv.begin(), vinv.begin() + s.rank);
  return hermite_rows(std::move(basis));
}

IntMatrix completed_basis(const IntMatrix& saturated) {
  std::size_t k = rows(saturated), d = cols(saturated);
  SmithDecomposition s = smith_normal_form(saturated);
  if (s.rank != k) fail(Err::DependentGenerators, "basis rows are dependent");
  for (std::size_t i = 0; i < k; ++i)
    if (s.d[i][i] != 1)
      fail(Err::NotSaturated, "sublattice has index > 1 in its saturation");
  IntMatrix vinv = unimodular_inverse(s.v);
  IntMatrix full(saturated);
  for (std::size_t i = k; i < d; ++i) full.push_back(vinv[i]);
  return full;
}

QuotientMap quotient_map(const IntMatrix& kernel, std::size_t rank) {
  std::size_t k = rows(kernel);
  if (k > 0 && cols(kernel) != rank) fail(Err::InvalidInput, "kernel rank mismatch");
  QuotientMap q;
  q.ambient_rank = rank;
  q.kernel = kernel;
  IntMatrix full = kernel.empty() ? identity_matrix(rank) : completed_basis(kernel);
  // Coordinates of n in the row basis: c = (B^T)^-1 n; drop the first k.
  IntMatrix bt(rank, IntVector(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) bt[i][j] = full[j][i];
  IntMatrix btinv = unimodular_inverse(bt);
  q.projection.assign(btinv.begin() + k, btinv.end());
  q.section.assign(rank, IntVector(rank - k));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = k; j < rank; ++j) q.section[i][j - k] = bt[i][j];
  return q;
}

std::size_t matrix_rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(rows(a), std::vector<Rational>(cols(a)));
  for (std::size_t i = 0; i < rows(a); ++i)
    for (std::size_t j = 0; j < cols(a); ++j) m[i][j] = Rational(a[i][j]);
  return echelon_form(std::move(m)).pivot_cols.size();
}

std::vector<Rational> solve_in_span(const IntMatrix& rows_in, const IntVector& target, bool* ok) {
  std::size_t k = rows(rows_in), d = cols(rows_in);
  // Solve rows^T x = target with augmented elimination.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(rows_in[j][i]);
    m[i][k] = Rational(target[i]);
  }
  Echelon e = echelon_form(std::move(m));
  std::vector<Rational> x(k, Rational(0));
  *ok = true;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == k) {
      *ok = false;  // inconsistent
      return {};
    }
    x[e.pivot_cols[r]] = e.m[r][k];
  }
  return x;
}

std::vector<ParallelotopePoint> parallelotope_points(const IntMatrix& generators) {
  std::size_t k = rows(generators), d = cols(generators);
  if (k == 0) fail(Err::InvalidInput, "parallelotope of no generators");
  if (matrix_rank(generators) != k)
    fail(Err::DependentGenerators, "parallelotope generators are dependent");

  IntVector lo(d, Int(0)), hi(d, Int(0));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      if (generators[i][j] < 0) lo[j] += generators[i][j];
      if (generators[i][j] > 0) hi[j] += generators[i][j];
    }

  std::vector<ParallelotopePoint> out;
  IntVector n(lo);
  for (;;) {
    bool ok = false;
    std::vector<Rational> lambda = solve_in_span(generators, n, &ok);
    if (ok) {
      bool inside = true, interior = true;
      for (const Rational& l : lambda) {
        if (l < 0 || l >= 1) inside = false;
        if (l <= 0) interior = false;
      }
      if (inside) out.push_back({n, std::move(lambda), interior});
    }
    std::size_t j = 0;
    while (j < d && n[j] == hi[j]) {
      n[j] = lo[j];
      ++j;
    }
    if (j == d) break;
    n[j] += 1;
  }
  return out;
}

std::vector<PrimitiveDual> primitive_duals(const IntMatrix& generators) {
  std::size_t k = rows(generators);
  if (k == 0) return {};
  if (matrix_rank(generators) != k)
    fail(Err::DependentGenerators, "dual vectors need independent generators");
  IntMatrix sat = saturation_basis(generators);
  std::size_t d = cols(generators);

  // Generators in saturation coordinates; integral because sat spans N_sigma.
  IntMatrix coords(k, IntVector(k));
  for (std::size_t i = 0; i < k; ++i) {
    bool ok = false;
    std::vector<Rational> x = solve_in_span(sat, generators[i], &ok);
    if (!ok) fail(Err::InvalidInput, "generator outside saturation span");
    for (std::size_t j = 0; j < k; ++j) {
      if (x[j].get_den() != 1) fail(Err::InvalidInput, "saturation coordinates not integral");
      coords[i][j] = x[j].get_num();
    }
  }

  // Dual functionals of the saturation basis rows, extended by zero.
  IntMatrix full = completed_basis(sat);
  IntMatrix bt(d, IntVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) bt[i][j] = full[j][i];
  IntMatrix dual_rows = unimodular_inverse(bt);  // row l pairs to 1 with basis row l

  std::vector<PrimitiveDual> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    // Solve coords * w = e_j over Q, then clear denominators to a primitive vector.
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) m[r][c] = Rational(coords[r][c]);
      m[r][k] = Rational(r == j ? 1 : 0);
    }
    Echelon e = echelon_form(std::move(m));
    std::vector<Rational> w(k);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) w[e.pivot_cols[r]] = e.m[r][k];
    Int den(1);
    for (const Rational& v : w) {
      Int piece;
      mpz_lcm(piece.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
      den = piece;
    }
    IntVector wi(k);
    Int g(0);
    for (std::size_t c = 0; c < k; ++c) {
      Rational scaled = w[c] * Rational(den);
      wi[c] = scaled.get_num();
      Int gg;
      mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), wi[c].get_mpz_t());
      g = gg;
    }
    for (auto& v : wi) v /= g;
    Int pairing = dot(coords[j], wi);
    if (pairing < 0) {
      for (auto& v : wi) v = -v;
      pairing = -pairing;
    }
    // Ambient representative.
    IntVector ambient(d, Int(0));
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t c = 0; c < d; ++c) ambient[c] += wi[l] * dual_rows[l][c];
    out[j] = {std::move(ambient), pairing};
  }
  return out;
}

}  // namespace toric
