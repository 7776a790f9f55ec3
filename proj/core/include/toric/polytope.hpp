#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

// Inward-pointing facet inequality <normal, x> >= -offset.  The normal is a
// primitive lattice vector.
struct FacetData {
  IntVector normal;
  Int offset;
  std::vector<int> vertices;  // indices of vertices lying on the facet, sorted
};

// A nonempty face of the polytope, identified by its vertex set.  The full
// polytope is a face of itself (empty facet list).
struct Face {
  std::vector<int> vertices;  // sorted vertex indices
  int dim = 0;
  std::vector<int> facets;  // indices of facets containing the face, sorted
};

// Full-dimensional lattice polytope given by its vertex list.  On build the
// facet description and the face lattice are derived and checked against the
// vertices; ranks above 3 are rejected.
class LatticePolytope {
 public:
  static LatticePolytope build(std::vector<IntVector> vertices);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<FacetData>& facets() const { return facets_; }

  // All faces in a deterministic order: ascending dimension, then
  // lexicographic vertex set.  The last entry is the polytope itself.
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t full_face() const { return faces_.size() - 1; }

  // Vertices scaled by a positive integer factor.
  LatticePolytope dilate(const Int& factor) const;

 private:
  LatticePolytope() = default;

  std::size_t rank_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<FacetData> facets_;
  std::vector<Face> faces_;
};

// A set of faces closed under passing to smaller faces, kept as sorted
// indices into polytope.faces().
struct PolytopalSubcomplex {
  std::vector<std::size_t> faces;
};

PolytopalSubcomplex make_subcomplex(const LatticePolytope& p,
                                    std::vector<std::size_t> face_indices);
PolytopalSubcomplex boundary_subcomplex(const LatticePolytope& p);
PolytopalSubcomplex full_subcomplex(const LatticePolytope& p);

// Lattice-point counts of the dilation by a nonnegative integer factor, by
// direct enumeration over the bounding box.  The face overload counts points
// of the dilated face, either all of them or only those in its relative
// interior.  The subcomplex overload counts each point of the union once.
Int count_lattice_points(const LatticePolytope& p, unsigned long dilation,
                         bool relative_interior = false);
Int count_lattice_points(const LatticePolytope& p, std::size_t face_index,
                         unsigned long dilation, bool relative_interior);
Int count_lattice_points(const LatticePolytope& p,
                         const PolytopalSubcomplex& complex,
                         unsigned long dilation);

// The normal fan.  Rays are the facet normals, indexed like the facets; each
// face of the polytope corresponds to the cone spanned by the normals of the
// facets containing it.  Fails with NotSimple when some vertex lies on more
// than rank() facets.
struct NormalFan {
  Fan fan;
  std::vector<ConeId> cone_of_face;  // aligned with polytope.faces()
};

NormalFan normal_fan(const LatticePolytope& p);

// Coefficients of the divisor sum_F a_F D_{rho_F} attached to the polytope,
// aligned with the facet (equivalently normal-fan ray) order.
std::vector<Int> polytope_divisor(const LatticePolytope& p);

}  // namespace toric
