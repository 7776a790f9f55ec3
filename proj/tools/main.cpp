#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/json_io.hpp"

using namespace toric;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kViolated = 2;
constexpr int kUnsupported = 3;

// Structurally fine input the engine cannot handle vs. malformed input.
int exit_code_for(Err e) {
  switch (e) {
    case Err::NotSimplicial:
    case Err::NotSimple:
    case Err::NotComplete:
    case Err::NotPolygon:
    case Err::RankTooHigh:
      return kUnsupported;
    default:
      return kInvalid;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string ivec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

// Left-aligned columns, two spaces apart, no trailing padding.
std::string align(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_fan_info(const std::string& path, const std::string& format) {
  const Fan fan = parse_fan_json(read_file(path));
  if (format == "json") {
    std::cout << fan_info_json(fan);
    return kOk;
  }
  const FanReport report = fan_report(fan);
  std::cout << "lattice rank: " << fan.rank() << "\n";
  std::vector<std::vector<std::string>> rays;
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    rays.push_back({"  " + std::to_string(i), ivec_str(fan.rays()[i])});
  std::cout << "rays:\n" << align(rays);
  std::cout << "max cones:";
  for (const ConeId& id : fan.max_cones()) std::cout << " " << cone_id_str(id);
  std::cout << "\n";
  std::cout << "smooth: " << yesno(report.smooth) << "\n";
  std::cout << "complete: " << yesno(report.complete) << "\n";
  std::cout << "torus factor: " << yesno(report.torus_factor) << "\n";
  std::cout << "cones by dimension:";
  for (std::size_t k = 0; k <= fan.rank(); ++k)
    std::cout << " " << fan.cones_of_dim(k).size();
  std::cout << "\n";
  if (report.singular_cones.empty()) {
    std::cout << "singular cones: none\n";
  } else {
    std::cout << "singular cones:\n";
    std::vector<std::vector<std::string>> rows;
    for (const ConeId& id : report.singular_cones)
      rows.push_back({"  " + cone_id_str(id),
                      "mult " + fan.cone(id).mult.get_str()});
    std::cout << align(rows);
  }
  return kOk;
}

ClassKind kind_from_flags(const std::string& kind, bool normalized) {
  if (kind == "todd") return ClassKind::ToddLRR;
  if (kind == "todd-omega") return ClassKind::ToddOmega;
  if (kind == "hirzebruch")
    return normalized ? ClassKind::HirzebruchNormalized
                      : ClassKind::HirzebruchUnnormalized;
  if (kind == "mock-hirzebruch") return ClassKind::MockHirzebruch;
  if (kind == "chern") return ClassKind::ChernEhler;
  if (kind == "todd-orbit") return ClassKind::ToddSubset;
  if (kind == "t-class") return ClassKind::TClass;
  if (kind == "mock-t-class") return ClassKind::MockTClass;
  fail(Err::InvalidInput, "unknown class kind '" + kind + "'");
}

int run_fan_class(const std::string& path, const std::string& kind,
                  bool normalized, const std::string& y_str,
                  const std::string& format) {
  const Fan fan = parse_fan_json(read_file(path));
  ClassRequest request;
  request.kind = kind_from_flags(kind, normalized);
  if (normalized && !class_kind_normalized(request.kind))
    fail(Err::InvalidInput, "'" + kind + "' is not a normalized kind");
  if (!y_str.empty()) request.y = parse_rational(y_str);
  const CycleClass c = compute_class(fan, request);
  if (format == "json") {
    std::cout << class_report_json(fan, request, c);
    return kOk;
  }
  std::cout << "kind: " << class_kind_name(request.kind)
            << (class_kind_normalized(request.kind) ? " (normalized)" : "");
  if (request.y) std::cout << ", y = " << rational_str(*request.y);
  std::cout << "\n";
  std::vector<std::vector<std::string>> rows{{"cone", "orbit dim", "coefficient"}};
  for (const auto& [id, coeff] : c.terms)
    rows.push_back({cone_id_str(id), std::to_string(fan.rank() - id.size()),
                    coeff.as_polynomial().str()});
  std::cout << align(rows);
  return kOk;
}

int run_fan_verify(const std::string& path, const std::string& format) {
  const Fan fan = parse_fan_json(read_file(path));
  const IdentityReport report = verify_identities(fan);
  if (format == "json") {
    std::cout << identity_report_json(report);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const IdentityResult& r : report.identities) {
      rows.push_back({r.pass ? "PASS" : "FAIL", r.name, r.statement});
      if (!r.pass) rows.push_back({"", "witness", r.witness});
    }
    std::cout << align(rows);
    std::size_t passed = 0;
    for (const IdentityResult& r : report.identities) passed += r.pass;
    std::cout << passed << " of " << report.identities.size()
              << " identities hold\n";
  }
  return report.all_pass ? kOk : kViolated;
}

int run_polytope_facets(const std::string& path, const std::string& format) {
  const LatticePolytope p = parse_polytope_json(read_file(path));
  if (format == "json") {
    std::cout << facet_report_json(p);
    return kOk;
  }
  std::cout << "rank: " << p.rank() << "\n";
  std::vector<std::vector<std::string>> vs;
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    vs.push_back({"  " + std::to_string(i), ivec_str(p.vertices()[i])});
  std::cout << "vertices:\n" << align(vs);
  std::vector<std::vector<std::string>> rows{{"  normal", "offset", "vertices"}};
  for (const FacetData& f : p.facets()) {
    std::string verts;
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      if (i) verts += ",";
      verts += std::to_string(f.vertices[i]);
    }
    rows.push_back({"  " + ivec_str(f.normal), f.offset.get_str(), "{" + verts + "}"});
  }
  std::cout << "facets:\n" << align(rows);
  std::cout << "faces by dimension:";
  std::vector<std::size_t> counts(p.rank() + 1, 0);
  for (const Face& f : p.faces()) ++counts[f.dim];
  for (std::size_t c : counts) std::cout << " " << c;
  std::cout << "\n";
  return kOk;
}

int run_polytope_ehrhart(const std::string& path,
                         const std::optional<unsigned long>& max_dilate,
                         const std::string& format) {
  const LatticePolytope p = parse_polytope_json(read_file(path));
  const EhrhartResult er = ehrhart_via_classes(p, max_dilate);
  if (format == "json") {
    std::cout << ehrhart_json(er);
  } else if (format == "csv") {
    std::cout << ehrhart_csv(er);
  } else {
    std::cout << "coefficients:";
    for (const Rational& a : er.coefficients) std::cout << " " << rational_str(a);
    std::cout << "\n";
    std::vector<std::vector<std::string>> rows{
        {"dilation", "count", "polynomial", "residual"}};
    for (std::size_t l = 0; l < er.brute_counts.size(); ++l) {
      const Rational value = Rational(er.brute_counts[l]) + er.residuals[l];
      rows.push_back({std::to_string(l), er.brute_counts[l].get_str(),
                      rational_str(value), rational_str(er.residuals[l])});
    }
    std::cout << align(rows);
  }
  return kOk;
}

int run_polytope_weighted(const std::string& path,
                          const std::string& subcomplex_path, bool dual,
                          const std::string& format) {
  const LatticePolytope p = parse_polytope_json(read_file(path));
  std::optional<PolytopalSubcomplex> sub;
  if (!subcomplex_path.empty())
    sub = parse_subcomplex_json(read_file(subcomplex_path), p);
  const WeightedMode mode = dual ? WeightedMode::Dual : WeightedMode::Standard;
  const WeightedCountReport report = weighted_count_identity(p, sub, mode);
  if (format == "json") {
    std::cout << weighted_json(report, mode);
  } else {
    std::cout << "mode: " << (dual ? "dual" : "standard") << "\n"
              << "lhs: " << report.lhs.str() << "\n"
              << "rhs: " << report.rhs.str() << "\n"
              << "equal: " << yesno(report.equal) << "\n";
  }
  return kOk;
}

int run_polytope_pick(const std::string& path, const std::string& format) {
  const LatticePolytope p = parse_polytope_json(read_file(path));
  const PickReport report = pick_report(p);
  if (format == "json") {
    std::cout << pick_json(report);
    return kOk;
  }
  std::cout << "area: " << rational_str(report.area) << "\n"
            << "boundary points: " << report.boundary_points.get_str() << "\n"
            << "interior points: " << report.interior_points.get_str() << "\n"
            << "total points: " << report.total_points.get_str() << "\n"
            << "vertices: " << report.vertex_count << "\n"
            << "ypick lhs: " << report.ypick_lhs.str() << "\n"
            << "ypick rhs: " << report.ypick_rhs.str() << "\n"
            << "ypick equal: " << yesno(report.ypick_equal) << "\n"
            << "classical pick (area + boundary/2 + 1): "
            << yesno(report.classical_pick) << "\n";
  return kOk;
}

int run_polytope_hirzpoly(const std::string& path, const std::string& format) {
  const LatticePolytope p = parse_polytope_json(read_file(path));
  const SheafEulerTable table = hirzebruch_polynomial(p);
  if (format == "json") {
    std::cout << sheaf_table_json(table);
    return kOk;
  }
  std::cout << "chi_y: " << table.chi_y.str() << "\n";
  std::vector<std::vector<std::string>> rows{{"p", "euler characteristic"}};
  for (std::size_t q = 0; q < table.per_p.size(); ++q)
    rows.push_back({std::to_string(q), rational_str(table.per_p[q])});
  std::cout << align(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characteristic classes and lattice-point counts for "
               "simplicial toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned threads = 1;
  app.add_option("--threads", threads,
                 "worker threads (reserved; execution is single-threaded)")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  CLI::App* fan = app.add_subcommand("fan", "operations on fan files");
  fan->require_subcommand(1);
  fan->fallthrough();
  {
    CLI::App* info = fan->add_subcommand("info", "structure and report");
    auto path = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    info->add_option("input", *path, "fan JSON file")->required();
    info->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    info->callback([=, &action] {
      action = [=] { return run_fan_info(*path, *format); };
    });
  }
  {
    CLI::App* cls = fan->add_subcommand("class", "characteristic class cycle");
    auto path = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>("hirzebruch");
    auto normalized = std::make_shared<bool>(false);
    auto y = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cls->add_option("input", *path, "fan JSON file")->required();
    cls->add_option("--kind", *kind,
                    "todd | todd-omega | hirzebruch | mock-hirzebruch | chern "
                    "| todd-orbit | t-class | mock-t-class");
    cls->add_flag("--normalized", *normalized, "normalized variant");
    cls->add_option("--y", *y, "rational value substituted for y");
    cls->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cls->callback([=, &action] {
      action = [=] {
        return run_fan_class(*path, *kind, *normalized, *y, *format);
      };
    });
  }
  {
    CLI::App* verify = fan->add_subcommand("verify", "run the identity battery");
    auto path = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    verify->add_option("input", *path, "fan JSON file")->required();
    verify->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    verify->callback([=, &action] {
      action = [=] { return run_fan_verify(*path, *format); };
    });
  }

  CLI::App* polytope = app.add_subcommand("polytope", "operations on polytope files");
  polytope->require_subcommand(1);
  polytope->fallthrough();
  {
    CLI::App* facets = polytope->add_subcommand("facets", "facet description");
    auto path = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    facets->add_option("input", *path, "polytope JSON file")->required();
    facets->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    facets->callback([=, &action] {
      action = [=] { return run_polytope_facets(*path, *format); };
    });
  }
  {
    CLI::App* ehrhart = polytope->add_subcommand(
        "ehrhart", "Ehrhart polynomial with brute-force residuals");
    auto path = std::make_shared<std::string>();
    auto max_dilate = std::make_shared<long>(-1);
    auto format = std::make_shared<std::string>("text");
    ehrhart->add_option("input", *path, "polytope JSON file")->required();
    ehrhart->add_option("--max-dilate", *max_dilate, "largest checked dilation")
        ->check(CLI::NonNegativeNumber);
    ehrhart->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    ehrhart->callback([=, &action] {
      action = [=] {
        std::optional<unsigned long> top;
        if (*max_dilate >= 0) top = static_cast<unsigned long>(*max_dilate);
        return run_polytope_ehrhart(*path, top, *format);
      };
    });
  }
  {
    CLI::App* weighted = polytope->add_subcommand(
        "weighted", "weighted lattice-point count identity");
    auto path = std::make_shared<std::string>();
    auto sub = std::make_shared<std::string>();
    auto dual = std::make_shared<bool>(false);
    auto format = std::make_shared<std::string>("text");
    weighted->add_option("input", *path, "polytope JSON file")->required();
    weighted->add_option("--subcomplex", *sub, "subcomplex JSON file");
    weighted->add_flag("--dual", *dual, "half-weighted closed counts");
    weighted->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    weighted->callback([=, &action] {
      action = [=] {
        return run_polytope_weighted(*path, *sub, *dual, *format);
      };
    });
  }
  {
    CLI::App* pick = polytope->add_subcommand("pick", "polygon Pick report");
    auto path = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    pick->add_option("input", *path, "polytope JSON file")->required();
    pick->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    pick->callback([=, &action] {
      action = [=] { return run_polytope_pick(*path, *format); };
    });
  }
  {
    CLI::App* hirz = polytope->add_subcommand(
        "hirzpoly", "chi_y polynomial and sheaf Euler characteristics");
    auto path = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    hirz->add_option("input", *path, "polytope JSON file")->required();
    hirz->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    hirz->callback([=, &action] {
      action = [=] { return run_polytope_hirzpoly(*path, *format); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return action ? action() : kInvalid;
  } catch (const ToricError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
