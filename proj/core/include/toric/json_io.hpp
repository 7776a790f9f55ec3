#pragma once

#include <string>

#include "toric/classes.hpp"
#include "toric/counting.hpp"
#include "toric/polytope.hpp"

namespace toric {

// All parsers reject malformed documents with InvalidInput; emitters
// produce deterministic output (sorted object keys, fixed field order).

// {"lattice_rank": d, "rays": [[...]], "max_cones": [[ray indices]]}
Fan parse_fan_json(const std::string& text);
std::string fan_json(const Fan& fan);

// {"vertices": [[...]]}
LatticePolytope parse_polytope_json(const std::string& text);
std::string polytope_json(const LatticePolytope& p);

// {"faces": [[vertex indices]]} or {"boundary": true}; faces are looked up
// by their sorted vertex sets and completed downward is NOT done here --
// the face lists must already be closed, as validated by make_subcomplex.
PolytopalSubcomplex parse_subcomplex_json(const std::string& text,
                                          const LatticePolytope& p);

// [{"cone": [ray indices], "orbit_dim": k, "coefficient": "<polynomial>"}]
std::string cycle_json(const Fan& fan, const CycleClass& c);
CycleClass parse_cycle_json(const Fan& fan, const std::string& text);

// Cycle list wrapped with metadata {kind, normalized, y}.
std::string class_report_json(const Fan& fan, const ClassRequest& request,
                              const CycleClass& c);

std::string fan_info_json(const Fan& fan);
std::string identity_report_json(const IdentityReport& report);

std::string facet_report_json(const LatticePolytope& p);
std::string ehrhart_json(const EhrhartResult& er);
// CSV columns: dilation, brute count, polynomial value, residual.
std::string ehrhart_csv(const EhrhartResult& er);
std::string weighted_json(const WeightedCountReport& report, WeightedMode mode);
std::string sheaf_table_json(const SheafEulerTable& table);
std::string pick_json(const PickReport& report);

}  // namespace toric
