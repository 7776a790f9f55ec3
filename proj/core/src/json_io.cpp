#include "toric/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Insertion-ordered documents: field order is fixed by the emit code, so
// output bytes are deterministic.
using jdoc = nlohmann::ordered_json;

jdoc parse_doc(const std::string& text) {
  jdoc doc = jdoc::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) fail(Err::InvalidInput, "malformed JSON document");
  return doc;
}

std::string dump(const jdoc& doc) { return doc.dump(2) + "\n"; }

jdoc int_json(const Int& v) {
  if (v.fits_slong_p()) return jdoc(v.get_si());
  return jdoc(v.get_str());
}

Int parse_int(const jdoc& v, const char* what) {
  if (v.is_number_integer()) return Int(v.get<long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() ||
        s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) !=
            std::string::npos)
      fail(Err::InvalidInput, std::string(what) + ": bad integer '" + s + "'");
    return Int(s);
  }
  fail(Err::InvalidInput, std::string(what) + ": expected an integer");
}

IntVector parse_ivec(const jdoc& a, const char* what) {
  if (!a.is_array()) fail(Err::InvalidInput, std::string(what) + ": expected an array");
  IntVector v;
  for (const jdoc& x : a) v.push_back(parse_int(x, what));
  return v;
}

std::vector<int> parse_index_list(const jdoc& a, const char* what) {
  if (!a.is_array()) fail(Err::InvalidInput, std::string(what) + ": expected an array");
  std::vector<int> v;
  for (const jdoc& x : a) {
    if (!x.is_number_integer() || x.get<long>() < 0)
      fail(Err::InvalidInput, std::string(what) + ": expected nonnegative indices");
    v.push_back(static_cast<int>(x.get<long>()));
  }
  return v;
}

jdoc ivec_json(const IntVector& v) {
  jdoc a = jdoc::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

jdoc cycle_array(const Fan& fan, const CycleClass& c) {
  jdoc arr = jdoc::array();
  for (const auto& [id, coeff] : c.terms) {
    jdoc t;
    t["cone"] = id;
    t["orbit_dim"] = fan.rank() - id.size();
    t["coefficient"] = coeff.as_polynomial().str();
    arr.push_back(std::move(t));
  }
  return arr;
}

}  // namespace

Fan parse_fan_json(const std::string& text) {
  const jdoc doc = parse_doc(text);
  if (!doc.is_object() || !doc.contains("lattice_rank") ||
      !doc.contains("rays") || !doc.contains("max_cones"))
    fail(Err::InvalidInput, "fan document needs lattice_rank, rays, max_cones");
  if (!doc["lattice_rank"].is_number_integer() || doc["lattice_rank"].get<long>() < 0)
    fail(Err::InvalidInput, "lattice_rank: expected a nonnegative integer");
  const auto rank = static_cast<std::size_t>(doc["lattice_rank"].get<long>());

  if (!doc["rays"].is_array()) fail(Err::InvalidInput, "rays: expected an array");
  std::vector<IntVector> rays;
  for (const jdoc& r : doc["rays"]) rays.push_back(parse_ivec(r, "rays"));

  if (!doc["max_cones"].is_array())
    fail(Err::InvalidInput, "max_cones: expected an array");
  std::vector<ConeId> cones;
  for (const jdoc& c : doc["max_cones"])
    cones.push_back(make_cone_id(parse_index_list(c, "max_cones")));

  return build_fan(rank, std::move(rays), std::move(cones));
}

std::string fan_json(const Fan& fan) {
  jdoc doc;
  doc["lattice_rank"] = fan.rank();
  jdoc rays = jdoc::array();
  for (const IntVector& r : fan.rays()) rays.push_back(ivec_json(r));
  doc["rays"] = std::move(rays);
  doc["max_cones"] = fan.max_cones();
  return dump(doc);
}

LatticePolytope parse_polytope_json(const std::string& text) {
  const jdoc doc = parse_doc(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    fail(Err::InvalidInput, "polytope document needs a vertices array");
  std::vector<IntVector> vs;
  for (const jdoc& v : doc["vertices"]) vs.push_back(parse_ivec(v, "vertices"));
  return LatticePolytope::build(std::move(vs));
}

std::string polytope_json(const LatticePolytope& p) {
  jdoc doc;
  jdoc vs = jdoc::array();
  for (const IntVector& v : p.vertices()) vs.push_back(ivec_json(v));
  doc["vertices"] = std::move(vs);
  return dump(doc);
}

PolytopalSubcomplex parse_subcomplex_json(const std::string& text,
                                          const LatticePolytope& p) {
  const jdoc doc = parse_doc(text);
  if (!doc.is_object())
    fail(Err::InvalidInput, "subcomplex document must be an object");
  if (doc.contains("boundary")) {
    if (doc.contains("faces") || !doc["boundary"].is_boolean() ||
        !doc["boundary"].get<bool>())
      fail(Err::InvalidInput, "subcomplex: boundary form is {\"boundary\": true}");
    return boundary_subcomplex(p);
  }
  if (!doc.contains("faces") || !doc["faces"].is_array())
    fail(Err::InvalidInput, "subcomplex document needs faces or boundary");

  std::map<std::vector<int>, std::size_t> by_vertices;
  for (std::size_t i = 0; i < p.faces().size(); ++i)
    by_vertices[p.faces()[i].vertices] = i;

  std::vector<std::size_t> indices;
  for (const jdoc& f : doc["faces"]) {
    std::vector<int> vs = parse_index_list(f, "faces");
    std::sort(vs.begin(), vs.end());
    const auto it = by_vertices.find(vs);
    if (it == by_vertices.end())
      fail(Err::InvalidInput, "faces: no face with the given vertex set");
    indices.push_back(it->second);
  }
  return make_subcomplex(p, std::move(indices));
}

std::string cycle_json(const Fan& fan, const CycleClass& c) {
  return dump(cycle_array(fan, c));
}

CycleClass parse_cycle_json(const Fan& fan, const std::string& text) {
  const jdoc doc = parse_doc(text);
  if (!doc.is_array()) fail(Err::InvalidInput, "cycle document must be an array");
  CycleClass out;
  for (const jdoc& t : doc) {
    if (!t.is_object() || !t.contains("cone") || !t.contains("orbit_dim") ||
        !t.contains("coefficient") || !t["coefficient"].is_string())
      fail(Err::InvalidInput,
           "cycle terms need cone, orbit_dim, coefficient fields");
    const ConeId id = make_cone_id(parse_index_list(t["cone"], "cone"));
    if (!fan.has_cone(id))
      fail(Err::InvalidInput, "cycle term on unknown cone " + cone_id_str(id));
    if (!t["orbit_dim"].is_number_integer() ||
        t["orbit_dim"].get<long>() !=
            static_cast<long>(fan.rank() - id.size()))
      fail(Err::InvalidInput,
           "orbit_dim mismatch for cone " + cone_id_str(id));
    const YRational coeff(parse_ypoly(t["coefficient"].get<std::string>()));
    if (coeff.is_zero()) continue;
    const auto [it, fresh] = out.terms.emplace(id, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

std::string class_report_json(const Fan& fan, const ClassRequest& request,
                              const CycleClass& c) {
  jdoc doc;
  doc["kind"] = class_kind_name(request.kind);
  doc["normalized"] = class_kind_normalized(request.kind);
  doc["y"] = request.y ? jdoc(rational_str(*request.y)) : jdoc(nullptr);
  doc["cycle"] = cycle_array(fan, c);
  return dump(doc);
}

std::string fan_info_json(const Fan& fan) {
  const FanReport report = fan_report(fan);
  jdoc doc;
  doc["lattice_rank"] = fan.rank();
  jdoc rays = jdoc::array();
  for (const IntVector& r : fan.rays()) rays.push_back(ivec_json(r));
  doc["rays"] = std::move(rays);
  doc["max_cones"] = fan.max_cones();
  doc["smooth"] = report.smooth;
  doc["complete"] = report.complete;
  doc["torus_factor"] = report.torus_factor;
  jdoc by_dim = jdoc::array();
  for (std::size_t k = 0; k <= fan.rank(); ++k)
    by_dim.push_back(fan.cones_of_dim(k).size());
  doc["cones_by_dim"] = std::move(by_dim);
  jdoc singular = jdoc::array();
  for (const ConeId& id : report.singular_cones) {
    jdoc s;
    s["cone"] = id;
    s["mult"] = int_json(fan.cone(id).mult);
    singular.push_back(std::move(s));
  }
  doc["singular_cones"] = std::move(singular);
  return dump(doc);
}

std::string identity_report_json(const IdentityReport& report) {
  jdoc doc;
  doc["all_pass"] = report.all_pass;
  jdoc list = jdoc::array();
  for (const IdentityResult& r : report.identities) {
    jdoc e;
    e["name"] = r.name;
    e["statement"] = r.statement;
    e["pass"] = r.pass;
    e["witness"] = r.witness;
    list.push_back(std::move(e));
  }
  doc["identities"] = std::move(list);
  return dump(doc);
}

std::string facet_report_json(const LatticePolytope& p) {
  jdoc doc;
  doc["rank"] = p.rank();
  jdoc vs = jdoc::array();
  for (const IntVector& v : p.vertices()) vs.push_back(ivec_json(v));
  doc["vertices"] = std::move(vs);
  jdoc fs = jdoc::array();
  for (const FacetData& f : p.facets()) {
    jdoc e;
    e["normal"] = ivec_json(f.normal);
    e["offset"] = int_json(f.offset);
    e["vertices"] = f.vertices;
    fs.push_back(std::move(e));
  }
  doc["facets"] = std::move(fs);
  jdoc by_dim = jdoc::array();
  std::vector<std::size_t> counts(p.rank() + 1, 0);
  for (const Face& f : p.faces()) ++counts[f.dim];
  for (std::size_t c : counts) by_dim.push_back(c);
  doc["faces_by_dim"] = std::move(by_dim);
  return dump(doc);
}

std::string ehrhart_json(const EhrhartResult& er) {
  jdoc doc;
  jdoc coeffs = jdoc::array();
  for (const Rational& a : er.coefficients) coeffs.push_back(rational_str(a));
  doc["coefficients"] = std::move(coeffs);
  jdoc counts = jdoc::array();
  for (const Int& c : er.brute_counts) counts.push_back(int_json(c));
  doc["brute_counts"] = std::move(counts);
  jdoc residuals = jdoc::array();
  for (const Rational& r : er.residuals) residuals.push_back(rational_str(r));
  doc["residuals"] = std::move(residuals);
  return dump(doc);
}

std::string ehrhart_csv(const EhrhartResult& er) {
  std::string out = "dilation,brute_count,polynomial_value,residual\n";
  for (std::size_t l = 0; l < er.brute_counts.size(); ++l) {
    const Rational value = Rational(er.brute_counts[l]) + er.residuals[l];
    out += std::to_string(l) + "," + er.brute_counts[l].get_str() + "," +
           rational_str(value) + "," + rational_str(er.residuals[l]) + "\n";
  }
  return out;
}

std::string weighted_json(const WeightedCountReport& report, WeightedMode mode) {
  jdoc doc;
  doc["mode"] = mode == WeightedMode::Dual ? "dual" : "standard";
  doc["lhs"] = report.lhs.str();
  doc["rhs"] = report.rhs.str();
  doc["equal"] = report.equal;
  return dump(doc);
}

std::string sheaf_table_json(const SheafEulerTable& table) {
  jdoc doc;
  doc["chi_y"] = table.chi_y.str();
  jdoc per_p = jdoc::array();
  for (const Rational& v : table.per_p) per_p.push_back(rational_str(v));
  doc["per_p"] = std::move(per_p);
  return dump(doc);
}

std::string pick_json(const PickReport& report) {
  jdoc doc;
  doc["area"] = rational_str(report.area);
  doc["interior_points"] = int_json(report.interior_points);
  doc["boundary_points"] = int_json(report.boundary_points);
  doc["total_points"] = int_json(report.total_points);
  doc["vertex_count"] = report.vertex_count;
  doc["ypick_lhs"] = report.ypick_lhs.str();
  doc["ypick_rhs"] = report.ypick_rhs.str();
  doc["ypick_equal"] = report.ypick_equal;
  doc["classical_pick"] = report.classical_pick;
  return dump(doc);
}

}  // namespace toric
