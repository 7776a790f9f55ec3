#include "toric/polytope.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Rank of the affine span of a vertex subset.
int affine_rank(const std::vector<IntVector>& vertices, const std::vector<int>& subset) {
  if (subset.empty()) return -1;
  IntMatrix diffs;
  for (std::size_t i = 1; i < subset.size(); ++i)
    diffs.push_back(subtract(vertices[subset[i]], vertices[subset[0]]));
  if (diffs.empty()) return 0;
  return static_cast<int>(matrix_rank(diffs));
}

void make_primitive(IntVector& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (Int& x : v) x /= g;
}

// Primitive normal of the hyperplane through the given affinely independent
// subset of size rank, or empty when the subset is degenerate.
IntVector hyperplane_normal(const std::vector<IntVector>& vertices,
                            const std::vector<int>& subset, std::size_t rank) {
  IntVector normal;
  if (rank == 1) {
    normal = {Int(1)};
  } else if (rank == 2) {
    IntVector d = subtract(vertices[subset[1]], vertices[subset[0]]);
    normal = {-d[1], d[0]};
  } else {
    IntVector a = subtract(vertices[subset[1]], vertices[subset[0]]);
    IntVector b = subtract(vertices[subset[2]], vertices[subset[0]]);
    normal = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
              a[0] * b[1] - a[1] * b[0]};
  }
  bool zero = true;
  for (const Int& x : normal)
    if (x != 0) zero = false;
  if (zero) return {};
  make_primitive(normal);
  return normal;
}

void append_subsets(std::size_t n, std::size_t k, std::vector<int>& prefix,
                    std::size_t next, std::vector<std::vector<int>>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = next; i + (k - prefix.size()) <= n; ++i) {
    prefix.push_back(static_cast<int>(i));
    append_subsets(n, k, prefix, i + 1, out);
    prefix.pop_back();
  }
}

}  // namespace

LatticePolytope LatticePolytope::build(std::vector<IntVector> vertices) {
  if (vertices.empty()) fail(Err::InvalidInput, "polytope needs vertices");
  std::size_t d = vertices[0].size();
  if (d == 0) fail(Err::InvalidInput, "polytope rank must be positive");
  if (d > 3) fail(Err::RankTooHigh, "facet enumeration supports rank at most 3");
  for (const IntVector& v : vertices)
    if (v.size() != d) fail(Err::InvalidInput, "inconsistent vertex lengths");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) fail(Err::InvalidInput, "duplicate vertex");

  std::vector<int> all;
  for (std::size_t i = 0; i < vertices.size(); ++i) all.push_back(static_cast<int>(i));
  if (affine_rank(vertices, all) != static_cast<int>(d))
    fail(Err::NotFullDimensional, "vertices do not span the ambient space");

  LatticePolytope p;
  p.rank_ = d;
  p.vertices_ = std::move(vertices);

  // Candidate hyperplanes through rank-many vertices; keep the ones with all
  // vertices on the nonnegative side, oriented inward.
  std::vector<std::vector<int>> subsets;
  std::vector<int> prefix;
  append_subsets(p.vertices_.size(), d, prefix, 0, subsets);
  std::set<std::pair<IntVector, Int>> seen;
  for (const std::vector<int>& s : subsets) {
    IntVector u = hyperplane_normal(p.vertices_, s, d);
    if (u.empty()) continue;
    Int c = dot(u, p.vertices_[s[0]]);
    bool pos = false, neg = false;
    for (const IntVector& w : p.vertices_) {
      Int t = dot(u, w) - c;
      if (t > 0) pos = true;
      if (t < 0) neg = true;
    }
    if (pos && neg) continue;
    if (neg)
      for (Int& x : u) x = -x;
    seen.insert({u, -dot(u, p.vertices_[s[0]])});
  }
  for (const auto& [u, a] : seen) {
    FacetData f;
    f.normal = u;
    f.offset = a;
    for (std::size_t i = 0; i < p.vertices_.size(); ++i)
      if (dot(u, p.vertices_[i]) + a == 0) f.vertices.push_back(static_cast<int>(i));
    if (affine_rank(p.vertices_, f.vertices) != static_cast<int>(d) - 1)
      fail(Err::InvalidInput, "degenerate facet");
    p.facets_.push_back(std::move(f));
  }
  if (p.facets_.size() < d + 1) fail(Err::InvalidInput, "too few facets");

  // Each vertex must be a genuine vertex: the normals of its facets span the
  // ambient space.  Catches non-minimal vertex lists.
  for (std::size_t i = 0; i < p.vertices_.size(); ++i) {
    IntMatrix normals;
    for (const FacetData& f : p.facets_)
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), static_cast<int>(i)))
        normals.push_back(f.normal);
    if (normals.empty() || matrix_rank(normals) != d)
      fail(Err::InvalidInput, "point is not a vertex of the hull");
  }

  // Face lattice: close the facet vertex sets under pairwise intersection,
  // then add the polytope itself.
  std::set<std::vector<int>> face_sets;
  for (const FacetData& f : p.facets_) face_sets.insert(f.vertices);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(face_sets.begin(), face_sets.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> meet;
        std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(),
                              current[j].end(), std::back_inserter(meet));
        if (!meet.empty() && face_sets.insert(meet).second) grew = true;
      }
  }
  face_sets.insert(all);
  for (const std::vector<int>& vs : face_sets) {
    Face f;
    f.vertices = vs;
    f.dim = affine_rank(p.vertices_, vs);
    for (std::size_t k = 0; k < p.facets_.size(); ++k)
      if (std::includes(p.facets_[k].vertices.begin(), p.facets_[k].vertices.end(),
                        vs.begin(), vs.end()))
        f.facets.push_back(static_cast<int>(k));
    p.faces_.push_back(std::move(f));
  }
  std::sort(p.faces_.begin(), p.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return p;
}

LatticePolytope LatticePolytope::dilate(const Int& factor) const {
  if (factor <= 0) fail(Err::InvalidInput, "dilation factor must be positive");
  std::vector<IntVector> scaled = vertices_;
  for (IntVector& v : scaled)
    for (Int& x : v) x *= factor;
  return build(std::move(scaled));
}

PolytopalSubcomplex make_subcomplex(const LatticePolytope& p,
                                    std::vector<std::size_t> face_indices) {
  std::sort(face_indices.begin(), face_indices.end());
  face_indices.erase(std::unique(face_indices.begin(), face_indices.end()),
                     face_indices.end());
  const std::vector<Face>& faces = p.faces();
  for (std::size_t idx : face_indices)
    if (idx >= faces.size()) fail(Err::InvalidInput, "face index out of range");
  // Closed under passing to faces: any face whose vertex set sits inside a
  // member's vertex set must itself be a member.
  for (std::size_t idx : face_indices)
    for (std::size_t k = 0; k < faces.size(); ++k) {
      if (!std::includes(faces[idx].vertices.begin(), faces[idx].vertices.end(),
                         faces[k].vertices.begin(), faces[k].vertices.end()))
        continue;
      if (!std::binary_search(face_indices.begin(), face_indices.end(), k))
        fail(Err::InvalidInput, "subcomplex not closed under taking faces");
    }
  return PolytopalSubcomplex{std::move(face_indices)};
}

PolytopalSubcomplex boundary_subcomplex(const LatticePolytope& p) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k + 1 < p.faces().size(); ++k) idx.push_back(k);
  return make_subcomplex(p, std::move(idx));
}

PolytopalSubcomplex full_subcomplex(const LatticePolytope& p) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < p.faces().size(); ++k) idx.push_back(k);
  return make_subcomplex(p, std::move(idx));
}

namespace {

// Membership of x in the dilation of a face: equality on its supporting
// facets, the inward inequality elsewhere (strict for the relative interior).
bool in_dilated_face(const LatticePolytope& p, const Face& f, const IntVector& x,
                     const Int& dilation, bool relative_interior) {
  std::size_t fi = 0;
  for (std::size_t k = 0; k < p.facets().size(); ++k) {
    const FacetData& facet = p.facets()[k];
    Int t = dot(facet.normal, x) + dilation * facet.offset;
    bool supporting = fi < f.facets.size() && f.facets[fi] == static_cast<int>(k);
    if (supporting) ++fi;
    if (supporting) {
      if (t != 0) return false;
    } else if (relative_interior ? t <= 0 : t < 0) {
      return false;
    }
  }
  return true;
}

template <typename Pred>
Int scan_box(const LatticePolytope& p, unsigned long dilation, Pred member) {
  std::size_t d = p.rank();
  IntVector lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = p.vertices()[0][j];
    hi[j] = p.vertices()[0][j];
    for (const IntVector& v : p.vertices()) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
    lo[j] *= static_cast<long>(dilation);
    hi[j] *= static_cast<long>(dilation);
  }
  Int count = 0;
  IntVector x = lo;
  while (true) {
    if (member(x)) ++count;
    std::size_t j = 0;
    while (j < d) {
      ++x[j];
      if (x[j] <= hi[j]) break;
      x[j] = lo[j];
      ++j;
    }
    if (j == d) break;
  }
  return count;
}

}  // namespace

Int count_lattice_points(const LatticePolytope& p, unsigned long dilation,
                         bool relative_interior) {
  return count_lattice_points(p, p.full_face(), dilation, relative_interior);
}

Int count_lattice_points(const LatticePolytope& p, std::size_t face_index,
                         unsigned long dilation, bool relative_interior) {
  if (face_index >= p.faces().size()) fail(Err::InvalidInput, "face index out of range");
  // The zero dilation of any face is the origin, its own relative interior.
  if (dilation == 0) return 1;
  const Face& f = p.faces()[face_index];
  Int ell(static_cast<long>(dilation));
  return scan_box(p, dilation, [&](const IntVector& x) {
    return in_dilated_face(p, f, x, ell, relative_interior);
  });
}

Int count_lattice_points(const LatticePolytope& p, const PolytopalSubcomplex& complex,
                         unsigned long dilation) {
  if (complex.faces.empty()) return 0;
  if (dilation == 0) return 1;
  Int ell(static_cast<long>(dilation));
  return scan_box(p, dilation, [&](const IntVector& x) {
    for (std::size_t idx : complex.faces)
      if (in_dilated_face(p, p.faces()[idx], x, ell, false)) return true;
    return false;
  });
}

NormalFan normal_fan(const LatticePolytope& p) {
  std::vector<IntVector> rays;
  for (const FacetData& f : p.facets()) rays.push_back(f.normal);
  std::vector<ConeId> max_cones;
  for (const Face& f : p.faces()) {
    if (f.dim != 0) continue;
    if (f.facets.size() != p.rank())
      fail(Err::NotSimple, "vertex " + std::to_string(f.vertices[0]) +
                               " lies on more than rank-many facets");
    max_cones.push_back(f.facets);
  }
  NormalFan nf{Fan::build(p.rank(), rays, max_cones), {}};
  for (const Face& f : p.faces()) {
    ConeId id = f.facets;
    if (!nf.fan.has_cone(id)) fail(Err::InvalidInput, "face with no matching cone");
    nf.cone_of_face.push_back(std::move(id));
  }
  return nf;
}

std::vector<Int> polytope_divisor(const LatticePolytope& p) {
  std::vector<Int> coefficients;
  for (const FacetData& f : p.facets()) coefficients.push_back(f.offset);
  return coefficients;
}

}  // namespace toric
