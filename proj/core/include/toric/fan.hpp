#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using ConeId = std::vector<int>;  // sorted ray indices; {} is the zero cone

ConeId make_cone_id(std::vector<int> rays);

struct GroupElement {
  IntVector n;                    // representative lattice point of the parallelotope
  std::vector<Rational> gamma;    // per cone ray, in [0, 1)
  std::vector<std::pair<unsigned long, long>> characters;  // (order, power): a = zeta_order^power
  bool interior = false;          // all gamma nonzero
};

struct ConeGroup {
  ConeId cone;
  Int mult;
  std::vector<GroupElement> elements;  // size = mult
};

struct ConeData {
  ConeId id;
  Int mult;
  ConeGroup group;
  std::vector<PrimitiveDual> duals;  // aligned with id order
};

struct FanReport {
  bool simplicial = true;
  bool smooth = false;
  bool complete = false;  // ridge pairing + adjacency + sampled directions
  bool torus_factor = false;
  std::vector<ConeId> singular_cones;
};

class Fan {
public:
  static Fan build(std::size_t rank, std::vector<IntVector> rays, std::vector<ConeId> max_cones);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::map<ConeId, ConeData>& cones() const { return cones_; }
  const std::vector<ConeId>& max_cones() const { return max_cones_; }

  bool has_cone(const ConeId& id) const { return cones_.count(id) > 0; }
  const ConeData& cone(const ConeId& id) const;
  std::vector<ConeId> cones_of_dim(std::size_t k) const;
  IntMatrix generators(const ConeId& id) const;  // rows = ray vectors

  // Cones of the fan that contain the point.
  bool supports_point(const IntVector& v) const;

private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::map<ConeId, ConeData> cones_;
  std::vector<ConeId> max_cones_;  // cones not a proper face of another
};

Fan build_fan(std::size_t rank, std::vector<IntVector> rays, std::vector<ConeId> max_cones);

FanReport fan_report(const Fan& fan);

const ConeGroup& cone_group(const Fan& fan, const ConeId& id);

struct StarFan {
  Fan fan;                              // in rank d - dim sigma
  ConeId base;                          // sigma in the ambient fan
  QuotientMap quotient;                 // N -> N / N_sigma
  std::vector<int> ray_to_ambient;      // star ray index -> ambient ray index
  std::map<ConeId, ConeId> cone_to_ambient;
};

StarFan star_fan(const Fan& fan, const ConeId& sigma);

struct ConeSubset {
  std::set<ConeId> cones;
};

// Validates star-closure: every cone having a member as a face is a member.
ConeSubset star_closed_subset(const Fan& fan, const std::vector<ConeId>& ids);

ConeSubset full_subset(const Fan& fan);

std::string cone_id_str(const ConeId& id);

}  // namespace toric
