#include "toric/fan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

ConeId make_cone_id(std::vector<int> rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

std::string cone_id_str(const ConeId& id) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (i) out << ",";
    out << id[i];
  }
  out << "}";
  return out.str();
}

namespace {

bool is_primitive(const IntVector& v) {
  Int g(0);
  for (const Int& x : v) {
    Int gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    g = gg;
  }
  return g == 1;
}

// Feasibility of {A x = c, x >= 0} over Q by elimination: Gauss on the
// equalities, then Fourier-Motzkin on the free variables.
bool nonneg_system_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> c) {
  std::size_t ne = a.size(), nv = ne ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < nv && r < ne; ++col) {
    std::size_t piv = ne;
    for (std::size_t i = r; i < ne; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == ne) continue;
    std::swap(a[r], a[piv]);
    std::swap(c[r], c[piv]);
    Rational inv = Rational(1) / a[r][col];
    for (auto& x : a[r]) x *= inv;
    c[r] *= inv;
    for (std::size_t i = 0; i < ne; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < nv; ++j) a[i][j] -= f * a[r][j];
      c[i] -= f * c[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < ne; ++i)
    if (c[i] != 0) return false;  // 0 = nonzero

  std::vector<bool> is_pivot(nv, false);
  for (std::size_t col : pivot_col) is_pivot[col] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < nv; ++col)
    if (!is_pivot[col]) free_cols.push_back(col);
  std::size_t nf = free_cols.size();

  // Inequalities sum(g_j t_j) + h >= 0 over the free variables t.
  struct Ineq {
    std::vector<Rational> g;
    Rational h;
  };
  std::vector<Ineq> sys;
  for (std::size_t i = 0; i < r; ++i) {
    // pivot var = c[i] - sum(a[i={free}] t) >= 0
    Ineq q{std::vector<Rational>(nf), c[i]};
    for (std::size_t j = 0; j < nf; ++j) q.g[j] = -a[i][free_cols[j]];
    sys.push_back(std::move(q));
  }
  for (std::size_t j = 0; j < nf; ++j) {
    Ineq q{std::vector<Rational>(nf), Rational(0)};
    q.g[j] = 1;
    sys.push_back(std::move(q));
  }

  for (std::size_t elim = 0; elim < nf; ++elim) {
    std::vector<Ineq> pos, neg, zero;
    for (auto& q : sys) {
      if (q.g[elim] > 0)
        pos.push_back(std::move(q));
      else if (q.g[elim] < 0)
        neg.push_back(std::move(q));
      else
        zero.push_back(std::move(q));
    }
    sys = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // scale to cancel t_elim: p/g_p + (-n/g_n)
        Ineq q{std::vector<Rational>(nf), Rational(0)};
        Rational sp = Rational(1) / p.g[elim];
        Rational sn = Rational(-1) / n.g[elim];
        for (std::size_t j = 0; j < nf; ++j) q.g[j] = sp * p.g[j] + sn * n.g[j];
        q.h = sp * p.h + sn * n.h;
        sys.push_back(std::move(q));
      }
  }
  for (const auto& q : sys)
    if (q.h < 0) return false;
  return true;
}

// True when sigma cap tau strictly exceeds the cone on their common rays.
bool improper_intersection(const IntMatrix& us, const IntMatrix& vs,
                           const std::vector<bool>& u_common, const std::vector<bool>& v_common) {
  std::size_t ka = us.size(), kb = vs.size();
  std::size_t d = us.empty() ? (vs.empty() ? 0 : vs[0].size()) : us[0].size();
  std::size_t nv = ka + kb;
  if (nv == 0) return false;
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(nv, Rational(0)));
  std::vector<Rational> c(d + 1, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < ka; ++i) a[j][i] = Rational(us[i][j]);
    for (std::size_t i = 0; i < kb; ++i) a[j][ka + i] = Rational(-vs[i][j]);
  }
  for (std::size_t i = 0; i < ka; ++i)
    if (!u_common[i]) a[d][i] = 1;
  for (std::size_t i = 0; i < kb; ++i)
    if (!v_common[i]) a[d][ka + i] = 1;
  c[d] = 1;
  return nonneg_system_feasible(std::move(a), std::move(c));
}

ConeGroup build_group(const ConeId& id, const IntMatrix& gens,
                      const std::vector<PrimitiveDual>& duals) {
  ConeGroup g;
  g.cone = id;
  if (id.empty()) {
    g.mult = 1;
    g.elements.push_back(GroupElement{IntVector{}, {}, {}, true});
    return g;
  }
  auto pts = parallelotope_points(gens);
  g.mult = Int(pts.size());
  for (const auto& p : pts) {
    GroupElement e;
    e.n = p.point;
    e.interior = true;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Rational num(dot(duals[j].m, p.point));
      Rational gamma = num / Rational(duals[j].pairing);
      // reduce mod 1 into [0, 1)
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), gamma.get_num().get_mpz_t(), gamma.get_den().get_mpz_t());
      gamma -= Rational(fl);
      e.gamma.push_back(gamma);
      if (gamma == 0) {
        e.characters.emplace_back(1ul, 0l);
        e.interior = false;
      } else {
        e.characters.emplace_back(gamma.get_den().get_ui(), gamma.get_num().get_si());
      }
    }
    g.elements.push_back(std::move(e));
  }
  return g;
}

}  // namespace

const ConeData& Fan::cone(const ConeId& id) const {
  auto it = cones_.find(id);
  if (it == cones_.end()) fail(Err::InvalidInput, "no such cone " + cone_id_str(id));
  return it->second;
}

std::vector<ConeId> Fan::cones_of_dim(std::size_t k) const {
  std::vector<ConeId> out;
  for (const auto& [id, data] : cones_)
    if (id.size() == k) out.push_back(id);
  return out;
}

IntMatrix Fan::generators(const ConeId& id) const {
  IntMatrix m;
  for (int r : id) m.push_back(rays_[r]);
  return m;
}

bool Fan::supports_point(const IntVector& v) const {
  for (const ConeId& id : max_cones_) {
    IntMatrix gens = generators(id);
    if (gens.empty()) {
      bool zero = true;
      for (const Int& x : v)
        if (x != 0) zero = false;
      if (zero) return true;
      continue;
    }
    bool ok = false;
    auto lambda = solve_in_span(gens, v, &ok);
    if (!ok) continue;
    bool nonneg = true;
    for (const auto& l : lambda)
      if (l < 0) nonneg = false;
    if (nonneg) return true;
  }
  return false;
}

Fan Fan::build(std::size_t rank, std::vector<IntVector> rays, std::vector<ConeId> max_cones) {
  Fan f;
  f.rank_ = rank;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rank) fail(Err::InvalidInput, "ray rank mismatch");
    if (!is_primitive(rays[i]))
      fail(Err::NonPrimitiveRay, "ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays[i] == rays[j])
        fail(Err::InvalidInput, "duplicate ray " + std::to_string(i));
  }
  f.rays_ = std::move(rays);

  std::set<ConeId> cone_set;
  cone_set.insert(ConeId{});
  for (ConeId mc : max_cones) {
    mc = make_cone_id(std::move(mc));
    for (int r : mc)
      if (r < 0 || r >= static_cast<int>(f.rays_.size()))
        fail(Err::InvalidInput, "cone ray index out of range");
    IntMatrix gens = f.generators(mc);
    if (!gens.empty() && matrix_rank(gens) != gens.size())
      fail(Err::NotSimplicial, "cone " + cone_id_str(mc) + " has dependent rays");
    // Simplicial: every ray subset is a face.
    std::size_t k = mc.size();
    for (std::size_t mask = 0; mask < (1ull << k); ++mask) {
      ConeId face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1ull << b)) face.push_back(mc[b]);
      cone_set.insert(std::move(face));
    }
  }

  // Pairwise intersections of cones must be their common-ray face; checking
  // the maximal cones covers all pairs in a simplicial collection.
  std::vector<ConeId> maximal;
  for (const ConeId& id : cone_set) {
    bool is_max = true;
    for (const ConeId& other : cone_set) {
      if (other.size() <= id.size()) continue;
      if (std::includes(other.begin(), other.end(), id.begin(), id.end())) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(id);
  }
  for (std::size_t x = 0; x < maximal.size(); ++x)
    for (std::size_t y = x + 1; y < maximal.size(); ++y) {
      const ConeId& s = maximal[x];
      const ConeId& t = maximal[y];
      ConeId common;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
      std::vector<bool> sc(s.size()), tc(t.size());
      for (std::size_t i = 0; i < s.size(); ++i)
        sc[i] = std::binary_search(common.begin(), common.end(), s[i]);
      for (std::size_t i = 0; i < t.size(); ++i)
        tc[i] = std::binary_search(common.begin(), common.end(), t[i]);
      if (improper_intersection(f.generators(s), f.generators(t), sc, tc))
        fail(Err::BadIntersection,
             "cones " + cone_id_str(s) + " and " + cone_id_str(t) + " do not meet in a face");
    }
  f.max_cones_ = std::move(maximal);

  for (const ConeId& id : cone_set) {
    ConeData data;
    data.id = id;
    IntMatrix gens = f.generators(id);
    if (id.empty()) {
      data.mult = 1;
    } else {
      // Index of the generator lattice in its saturation: SNF diagonal product.
      IntMatrix sat = saturation_basis(gens);
      IntMatrix coords(gens.size(), IntVector(gens.size()));
      for (std::size_t i = 0; i < gens.size(); ++i) {
        bool ok = false;
        auto x = solve_in_span(sat, gens[i], &ok);
        if (!ok) fail(Err::InvalidInput, "saturation solve failed");
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (x[j].get_den() != 1) fail(Err::InvalidInput, "non-integral saturation coordinate");
          coords[i][j] = x[j].get_num();
        }
      }
      SmithDecomposition snf = smith_normal_form(coords);
      Int det(1);
      for (std::size_t i = 0; i < gens.size(); ++i) det *= snf.d[i][i];
      data.mult = det < 0 ? Int(-det) : det;
      data.duals = primitive_duals(gens);
    }
    data.group = build_group(id, gens, data.duals);
    if (data.group.mult != data.mult)
      fail(Err::InvalidInput, "group order disagrees with multiplicity for " + cone_id_str(id));
    f.cones_.emplace(id, std::move(data));
  }
  return f;
}

Fan build_fan(std::size_t rank, std::vector<IntVector> rays, std::vector<ConeId> max_cones) {
  return Fan::build(rank, std::move(rays), std::move(max_cones));
}

FanReport fan_report(const Fan& fan) {
  FanReport rep;
  rep.smooth = true;
  for (const auto& [id, data] : fan.cones()) {
    if (data.mult > 1) {
      rep.smooth = false;
      rep.singular_cones.push_back(id);
    }
  }

  IntMatrix all_rays;
  for (const auto& r : fan.rays()) all_rays.push_back(r);
  std::size_t span = all_rays.empty() ? 0 : matrix_rank(all_rays);
  rep.torus_factor = span < fan.rank();

  // Completeness: pure of top dimension, every ridge in exactly two top cones,
  // connected top-cone adjacency, and sampled directions inside the support.
  const std::size_t d = fan.rank();
  if (d == 0) {
    rep.complete = fan.has_cone(ConeId{});
    return rep;
  }
  bool pure = true;
  for (const ConeId& mc : fan.max_cones())
    if (mc.size() != d) pure = false;
  auto top = fan.cones_of_dim(d);
  if (!pure || top.empty()) {
    rep.complete = false;
    return rep;
  }

  std::map<ConeId, std::vector<std::size_t>> ridge_owners;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t drop = 0; drop < d; ++drop) {
      ConeId ridge;
      for (std::size_t j = 0; j < d; ++j)
        if (j != drop) ridge.push_back(top[i][j]);
      ridge_owners[ridge].push_back(i);
    }
  }
  bool ridges_ok = true;
  for (const auto& [ridge, owners] : ridge_owners)
    if (owners.size() != 2) ridges_ok = false;
  if (!ridges_ok) {
    rep.complete = false;
    return rep;
  }
  // Adjacency connectivity.
  std::vector<int> comp(top.size(), -1);
  std::vector<std::size_t> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    for (const auto& [ridge, owners] : ridge_owners)
      for (std::size_t o : owners) {
        if (comp[o] < 0 && (owners[0] == cur || owners[1] == cur)) {
          comp[o] = 0;
          stack.push_back(o);
        }
      }
  }
  for (int cflag : comp)
    if (cflag < 0) {
      rep.complete = false;
      return rep;
    }

  std::vector<IntVector> samples;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, Int(0));
    e[i] = 1;
    samples.push_back(e);
    e[i] = -1;
    samples.push_back(e);
  }
  std::size_t base = samples.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i + 1; j < base; ++j) {
      IntVector s(d);
      bool zero = true;
      for (std::size_t t = 0; t < d; ++t) {
        s[t] = samples[i][t] + samples[j][t];
        if (s[t] != 0) zero = false;
      }
      if (!zero) samples.push_back(std::move(s));
    }
  rep.complete = true;
  for (const auto& s : samples)
    if (!fan.supports_point(s)) {
      rep.complete = false;
      break;
    }
  return rep;
}

const ConeGroup& cone_group(const Fan& fan, const ConeId& id) { return fan.cone(id).group; }

StarFan star_fan(const Fan& fan, const ConeId& sigma) {
  const std::size_t d = fan.rank();
  fan.cone(sigma);  // existence check
  StarFan out;
  out.base = sigma;

  IntMatrix kernel;
  if (!sigma.empty()) kernel = saturation_basis(fan.generators(sigma));
  out.quotient = quotient_map(kernel, d);
  const std::size_t k = kernel.size();
  const std::size_t q = d - k;

  // Star rays: primitive images of rays of cones containing sigma.
  std::vector<int> ray_to_ambient;
  std::map<int, int> ambient_to_star;
  for (const auto& [id, data] : fan.cones()) {
    if (!std::includes(id.begin(), id.end(), sigma.begin(), sigma.end())) continue;
    for (int r : id)
      if (!std::binary_search(sigma.begin(), sigma.end(), r) && !ambient_to_star.count(r)) {
        ambient_to_star[r] = 0;  // placeholder, fixed after sorting
        ray_to_ambient.push_back(r);
      }
  }
  std::sort(ray_to_ambient.begin(), ray_to_ambient.end());
  std::vector<IntVector> star_rays;
  for (std::size_t i = 0; i < ray_to_ambient.size(); ++i) {
    ambient_to_star[ray_to_ambient[i]] = static_cast<int>(i);
    IntVector img = matrix_apply(out.quotient.projection, fan.rays()[ray_to_ambient[i]]);
    Int g(0);
    for (const Int& x : img) {
      Int gg;
      mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      g = gg;
    }
    if (g == 0) fail(Err::InvalidInput, "star ray image vanishes");
    if (g != 1)
      for (auto& x : img) x /= g;
    for (const auto& prev : star_rays)
      if (prev == img)
        fail(Err::InvalidInput, "distinct rays collide in the star fan quotient");
    star_rays.push_back(std::move(img));
  }

  std::vector<ConeId> star_max;
  for (const ConeId& mc : fan.max_cones()) {
    if (!std::includes(mc.begin(), mc.end(), sigma.begin(), sigma.end())) continue;
    ConeId img;
    for (int r : mc)
      if (!std::binary_search(sigma.begin(), sigma.end(), r)) img.push_back(ambient_to_star[r]);
    star_max.push_back(make_cone_id(std::move(img)));
  }
  out.fan = Fan::build(q, std::move(star_rays), std::move(star_max));
  out.ray_to_ambient = std::move(ray_to_ambient);

  for (const auto& [id, data] : out.fan.cones()) {
    ConeId ambient(sigma);
    for (int r : id) ambient.push_back(out.ray_to_ambient[r]);
    out.cone_to_ambient[id] = make_cone_id(std::move(ambient));
  }
  return out;
}

ConeSubset star_closed_subset(const Fan& fan, const std::vector<ConeId>& ids) {
  ConeSubset subset;
  for (const ConeId& id : ids) {
    fan.cone(id);
    subset.cones.insert(id);
  }
  for (const ConeId& id : subset.cones)
    for (const auto& [other, data] : fan.cones()) {
      if (other.size() <= id.size()) continue;
      if (!std::includes(other.begin(), other.end(), id.begin(), id.end())) continue;
      if (!subset.cones.count(other))
        fail(Err::NotStarClosed, "cone " + cone_id_str(other) + " contains member " +
                                     cone_id_str(id) + " but is missing");
    }
  return subset;
}

ConeSubset full_subset(const Fan& fan) {
  ConeSubset subset;
  for (const auto& [id, data] : fan.cones()) subset.cones.insert(id);
  return subset;
}

}  // namespace toric
