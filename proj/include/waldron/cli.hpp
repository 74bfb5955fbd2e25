#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "waldron/analysis.hpp"
#include "waldron/concentric.hpp"
#include "waldron/errors.hpp"
#include "waldron/golden.hpp"
#include "waldron/interp.hpp"
#include "waldron/io.hpp"
#include "waldron/points.hpp"

namespace waldron::cli {

namespace detail {

inline void emit(const std::string& path, const std::string& content,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << content;
}

inline std::vector<double> parse_radii_list(const std::string& spec) {
  std::vector<double> out;
  for (const std::string& part : io::detail::split(spec, ',')) {
    try {
      out.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw SpecParseError("radii list '" + spec + "': bad entry '" + part + "'");
    }
  }
  return out;
}

/// Grid flag: "auto" (adaptive) or a fixed positive lattice resolution.
inline int parse_grid_flag(const std::string& spec) {
  if (spec == "auto") return 0;
  try {
    const int m = std::stoi(spec);
    if (m >= 1) return m;
  } catch (const std::exception&) {
  }
  throw SpecParseError("grid '" + spec + "': expected 'auto' or a positive integer");
}

inline Simplex default_simplex(FamilyKind kind, const std::string& simplex_spec) {
  if (!simplex_spec.empty()) return io::parse_simplex_spec(simplex_spec);
  switch (kind) {
    case FamilyKind::WaldronModified3D:
      return Simplex::centred_tetrahedron();
    default:
      return Simplex::equilateral_triangle();
  }
}

// --------------------------------------------------------------------------
// gen
// --------------------------------------------------------------------------

struct GenConfig {
  std::string family = "simplex";
  std::string weight;
  std::string simplex;
  std::string radii;
  int degree = 0;
  bool full_sphere = false;
  std::string output;
  std::string format = "csv";
  std::string svg;
};

inline int run_gen(const GenConfig& cfg, std::ostream& out) {
  if (cfg.family == "spherical") {
    const Weight w =
        io::parse_weight_spec(cfg.weight.empty() ? "cosine" : cfg.weight);
    const std::vector<Eigen::Vector3d> pts =
        cfg.full_sphere ? spherical_full_sphere(cfg.degree, w)
                        : spherical_waldron_points(cfg.degree, w);
    std::ostringstream body;
    if (cfg.format == "json") {
      nlohmann::json j;
      j["family"] = "spherical:" + w.name();
      j["degree"] = cfg.degree;
      j["full_sphere"] = cfg.full_sphere;
      j["count"] = pts.size();
      for (const auto& p : pts) j["points"].push_back({p(0), p(1), p(2)});
      body << j.dump(2) << '\n';
    } else {
      io::write_sphere_csv(body, pts);
    }
    emit(cfg.output, body.str(), out);
    if (!cfg.svg.empty()) {
      // Orthographic projection onto z = 0.
      std::vector<Eigen::Vector2d> flat;
      for (const auto& p : pts) flat.emplace_back(p(0), p(1));
      std::ofstream f(cfg.svg);
      if (!f) throw IoError("cannot write '" + cfg.svg + "'");
      io::write_scatter_svg(f, flat);
    }
    return 0;
  }

  if (cfg.full_sphere) {
    throw SpecParseError("--full-sphere requires --family spherical");
  }

  FamilySpec spec;
  if (cfg.family == "simplex") {
    spec.kind = FamilyKind::Simplex;
  } else if (cfg.family == "concentric") {
    spec.kind = FamilyKind::Concentric;
    if (!cfg.radii.empty()) spec.radii = parse_radii_list(cfg.radii);
  } else if (cfg.family == "waldron" || cfg.family == "waldron-mod3d") {
    spec.kind = cfg.family == "waldron" ? FamilyKind::Waldron
                                        : FamilyKind::WaldronModified3D;
    spec.weight =
        io::parse_weight_spec(cfg.weight.empty() ? "cosine" : cfg.weight);
  } else {
    throw SpecParseError("unknown family '" + cfg.family + "'");
  }
  if (spec.kind != FamilyKind::Waldron &&
      spec.kind != FamilyKind::WaldronModified3D && !cfg.weight.empty()) {
    throw SpecParseError("--weight is not used by family '" + cfg.family + "'");
  }

  const Simplex simplex = default_simplex(spec.kind, cfg.simplex);
  const NodeFamily family = make_family(spec, simplex, cfg.degree);

  std::ostringstream body;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["family"] = family.label;
    j["degree"] = family.degree;
    j["dim"] = family.simplex.dim();
    j["count"] = family.size();
    for (const Node& node : family.nodes) {
      nlohmann::json rec;
      rec["alpha"] = node.index;
      for (int k = 0; k < node.cartesian.size(); ++k) {
        rec["x"].push_back(node.cartesian(k));
      }
      for (int k = 0; k < node.barycentric.size(); ++k) {
        rec["lambda"].push_back(node.barycentric(k));
      }
      j["nodes"].push_back(std::move(rec));
    }
    body << j.dump(2) << '\n';
  } else {
    io::write_nodes_csv(body, family);
  }
  emit(cfg.output, body.str(), out);

  if (!cfg.svg.empty()) {
    if (simplex.dim() != 2) {
      throw SpecParseError("--svg requires a 2D point set");
    }
    std::vector<Eigen::Vector2d> flat;
    for (const Node& node : family.nodes) {
      flat.emplace_back(node.cartesian(0), node.cartesian(1));
    }
    std::ofstream f(cfg.svg);
    if (!f) throw IoError("cannot write '" + cfg.svg + "'");
    io::write_scatter_svg(f, flat);
  }
  return 0;
}

// --------------------------------------------------------------------------
// interp
// --------------------------------------------------------------------------

struct InterpConfig {
  std::string scheme = "general";
  std::string family;
  std::string weight;
  std::string simplex;
  std::string fn = "f1";
  int degree = 0;
  int grid = 60;
  std::string output;
};

inline Scheme parse_scheme(const std::string& s) {
  if (s == "simplex" || s == "simplex-explicit") return Scheme::SimplexExplicit;
  if (s == "waldron" || s == "waldron-explicit") return Scheme::WaldronExplicit;
  if (s == "rational" || s == "waldron-rational") return Scheme::WaldronRational;
  if (s == "general") return Scheme::GeneralPolynomial;
  throw SpecParseError("unknown scheme '" + s +
                       "' (simplex, waldron, rational, general)");
}

inline int run_interp(const InterpConfig& cfg, std::ostream& out) {
  const Scheme scheme = parse_scheme(cfg.scheme);
  FamilySpec spec;
  if (!cfg.family.empty()) {
    spec = io::parse_family_spec(cfg.family);
  } else {
    switch (scheme) {
      case Scheme::SimplexExplicit:
        spec.kind = FamilyKind::Simplex;
        break;
      case Scheme::WaldronExplicit:
      case Scheme::WaldronRational:
        spec.kind = FamilyKind::Waldron;
        spec.weight =
            io::parse_weight_spec(cfg.weight.empty() ? "cosine" : cfg.weight);
        break;
      case Scheme::GeneralPolynomial:
        if (!cfg.weight.empty()) {
          spec.kind = FamilyKind::Waldron;
          spec.weight = io::parse_weight_spec(cfg.weight);
        } else {
          spec.kind = FamilyKind::Simplex;
        }
        break;
    }
  }
  const Simplex simplex = default_simplex(spec.kind, cfg.simplex);
  const NodeFamily family = make_family(spec, simplex, cfg.degree);
  const int d = simplex.dim();

  Eigen::VectorXd values(static_cast<Eigen::Index>(family.size()));
  if (cfg.fn == "f1") {
    for (std::size_t k = 0; k < family.size(); ++k) {
      values(static_cast<Eigen::Index>(k)) =
          std::sin(std::numbers::pi * family.nodes[k].cartesian.squaredNorm());
    }
  } else if (cfg.fn.rfind("csv:", 0) == 0) {
    const io::CsvTable csv = io::read_csv_file(cfg.fn.substr(4));
    if (csv.rows.size() != family.size()) {
      std::ostringstream msg;
      msg << "node values file: expected " << family.size() << " rows, got "
          << csv.rows.size();
      throw IoError(msg.str());
    }
    for (std::size_t k = 0; k < csv.rows.size(); ++k) {
      values(static_cast<Eigen::Index>(k)) = csv.rows[k].back();
    }
  } else {
    throw SpecParseError("unknown function '" + cfg.fn +
                         "' (f1 or csv:<path> with one value per node)");
  }

  const Interpolant interp(scheme, family, values);

  std::ostringstream body;
  body << (d == 2 ? "x,y,value" : d == 3 ? "x,y,z,value" : "x,value") << '\n';
  const int M = cfg.grid;
  std::int64_t poles = 0;
  for_each_multi_index(M, d, [&](const MultiIndex& beta) {
    Eigen::VectorXd lambda(d + 1);
    for (int j = 0; j <= d; ++j) {
      lambda(j) = static_cast<double>(beta[static_cast<std::size_t>(j)]) / M;
    }
    const Eigen::VectorXd x = simplex.from_barycentric(lambda);
    double v;
    try {
      v = interp.eval_lambda(lambda);
    } catch (const PoleError&) {
      ++poles;
      v = std::numeric_limits<double>::quiet_NaN();
    }
    for (int j = 0; j < d; ++j) body << io::format_double(x(j)) << ',';
    body << io::format_double(v) << '\n';
  });
  emit(cfg.output, body.str(), out);
  return 0;
}

// --------------------------------------------------------------------------
// chart
// --------------------------------------------------------------------------

struct ChartConfig {
  std::string weight = "cosine";
  std::string simplex;
  std::string direction = "forward";
  std::string input;
  std::string output;
  bool skip_missing = false;
};

inline int run_chart(const ChartConfig& cfg, std::ostream& out) {
  if (cfg.direction != "forward" && cfg.direction != "inverse") {
    throw SpecParseError("--direction must be forward or inverse");
  }
  if (cfg.input.empty()) throw SpecParseError("chart: -i <points.csv> required");
  const io::CsvTable csv = io::read_csv_file(cfg.input);
  if (csv.rows.empty()) throw IoError("chart: no rows in '" + cfg.input + "'");
  const int cols = static_cast<int>(csv.rows.front().size());
  if (cols < 2 || cols > 4) {
    throw IoError("chart: expected d+1 barycentric columns (d = 1..3)");
  }
  const int d = cols - 1;
  const Simplex simplex =
      cfg.simplex.empty()
          ? (d == 3 ? Simplex::centred_tetrahedron()
                    : d == 2 ? Simplex::equilateral_triangle() : Simplex::unit(1))
          : io::parse_simplex_spec(cfg.simplex);
  if (simplex.dim() != d) {
    throw SpecParseError("chart: simplex dimension does not match the input");
  }
  const BaryweightChart chart(simplex, io::parse_weight_spec(cfg.weight));

  std::ostringstream body;
  const char* name = cfg.direction == "forward" ? "lambda" : "theta";
  for (int j = 0; j <= d; ++j) {
    body << name << '_' << j + 1 << (j == d ? '\n' : ',');
  }
  for (const auto& row : csv.rows) {
    Eigen::VectorXd in(d + 1);
    for (int j = 0; j <= d; ++j) in(j) = row[static_cast<std::size_t>(j)];
    Eigen::VectorXd result;
    try {
      result = cfg.direction == "forward" ? chart.forward(in) : chart.invert(in);
    } catch (const NotInImageError&) {
      if (!cfg.skip_missing) throw;
      result = Eigen::VectorXd::Constant(d + 1,
                                         std::numeric_limits<double>::quiet_NaN());
    }
    for (int j = 0; j <= d; ++j) {
      body << io::format_double(result(j)) << (j == d ? '\n' : ',');
    }
  }
  emit(cfg.output, body.str(), out);
  return 0;
}

// --------------------------------------------------------------------------
// lebesgue
// --------------------------------------------------------------------------

struct LebesgueCliConfig {
  std::string families = "simplex";
  std::string degrees = "1..8";
  int dim = 2;
  std::string grid = "auto";
  std::string scheme = "default";
  std::string output;
  std::string format = "text";
};

inline int run_lebesgue(const LebesgueCliConfig& cfg, std::ostream& out) {
  const std::vector<FamilySpec> specs = io::parse_family_list(cfg.families);
  const std::vector<int> degrees = io::parse_degree_spec(cfg.degrees);
  if (cfg.dim != 2 && cfg.dim != 3) {
    throw SpecParseError("--dim must be 2 or 3");
  }
  const int grid = parse_grid_flag(cfg.grid);

  LebesgueTable table;
  if (cfg.scheme == "default") {
    table = lebesgue_table(specs, degrees, cfg.dim, grid);
  } else if (cfg.scheme == "rational") {
    // Rational cardinals at Waldron points, reported under a distinct label.
    const Simplex simplex = cfg.dim == 3 ? Simplex::centred_tetrahedron()
                                         : Simplex::equilateral_triangle();
    for (const FamilySpec& spec : specs) {
      if (spec.kind != FamilyKind::Waldron) {
        throw SpecParseError(
            "--scheme rational requires waldron:<weight> families");
      }
      table.columns.push_back(spec.label() + " (rational)");
    }
    for (int n : degrees) {
      table.degrees.push_back(n);
      table.node_counts.push_back(simplex_lattice_size(n, cfg.dim));
      std::vector<double> row;
      for (const FamilySpec& spec : specs) {
        const NodeFamily family = make_family(spec, simplex, n);
        LebesgueReport report =
            grid > 0
                ? lebesgue_constant(family, Scheme::WaldronRational, grid)
                : lebesgue_constant_auto(family, Scheme::WaldronRational);
        row.push_back(report.constant);
        table.reports.push_back(std::move(report));
      }
      table.constants.push_back(std::move(row));
    }
  } else {
    throw SpecParseError("--scheme must be default or rational");
  }

  std::ostringstream body;
  if (cfg.format == "csv") {
    io::write_lebesgue_table_csv(body, table);
  } else if (cfg.format == "json") {
    nlohmann::json j;
    j["dim"] = cfg.dim;
    j["columns"] = table.columns;
    for (std::size_t r = 0; r < table.degrees.size(); ++r) {
      nlohmann::json row;
      row["degree"] = table.degrees[r];
      row["node_count"] = table.node_counts[r];
      for (double v : table.constants[r]) {
        row["constants"].push_back(std::isnan(v)
                                       ? nlohmann::json(nullptr)
                                       : nlohmann::json(v));
      }
      j["rows"].push_back(std::move(row));
    }
    for (const LebesgueReport& rep : table.reports) {
      nlohmann::json r;
      r["family"] = rep.family;
      r["scheme"] = rep.scheme;
      r["degree"] = rep.degree;
      r["grid"] = rep.grid;
      r["constant"] = rep.constant;
      r["elapsed_seconds"] = rep.elapsed_seconds;
      r["pole_skips"] = rep.pole_skips;
      j["reports"].push_back(std::move(r));
    }
    body << j.dump(2) << '\n';
  } else if (cfg.format == "text") {
    body << io::format_lebesgue_table_text(table);
  } else {
    throw SpecParseError("--format must be text, csv, or json");
  }
  emit(cfg.output, body.str(), out);
  return 0;
}

// --------------------------------------------------------------------------
// spacing
// --------------------------------------------------------------------------

struct SpacingConfig {
  std::string weight = "cosine";
  int degree = 20;
  int grid = 400;
  std::string output;
};

inline int run_spacing(const SpacingConfig& cfg, std::ostream& out) {
  const Weight w = io::parse_weight_spec(cfg.weight);
  const SpacingReport extrema = spacing_extrema(w, cfg.grid);
  const SpacingReport neighbors = neighbor_spacing(w, cfg.degree);
  nlohmann::json j;
  j["weight"] = w.name();
  j["grid"] = extrema.grid;
  j["min_ratio_sq"] = extrema.min_ratio_sq;
  j["max_ratio_sq"] = extrema.max_ratio_sq;
  j["max_ratio"] = std::sqrt(extrema.max_ratio_sq);
  j["argmax_theta"] = {extrema.argmax_theta(0), extrema.argmax_theta(1),
                       extrema.argmax_theta(2)};
  j["critical_theta3"] = extrema.critical_theta3;
  j["degree"] = neighbors.degree;
  j["neighbor_min"] = neighbors.neighbor_min;
  j["neighbor_max"] = neighbors.neighbor_max;
  j["neighbor_min_ratio"] = neighbors.neighbor_min_ratio;
  j["neighbor_max_ratio"] = neighbors.neighbor_max_ratio;
  emit(cfg.output, j.dump(2) + "\n", out);
  return 0;
}

// --------------------------------------------------------------------------
// radii
// --------------------------------------------------------------------------

struct RadiiConfig {
  bool table = false;
  int degree = 0;
  std::string seed = "table";
  std::string format = "text";
  std::string output;
};

inline int run_radii(const RadiiConfig& cfg, std::ostream& out) {
  std::ostringstream body;
  if (cfg.table) {
    if (cfg.format == "csv") {
      io::write_radii_table_csv(body);
    } else {
      for (const ConcentricRadiiRow& row : concentric_radii_table()) {
        body << "n=" << row.degree << "  rings=" << row.radii.size()
             << (row.has_origin ? "  +origin  " : "          ");
        for (std::size_t i = 0; i < row.radii.size(); ++i) {
          body << (i ? ", " : "R = ") << io::format_double(row.radii[i]);
        }
        body << '\n';
      }
    }
    emit(cfg.output, body.str(), out);
    return 0;
  }
  if (cfg.degree < 1) {
    throw SpecParseError("radii: --degree <n> or --table required");
  }
  RadiiSeed seed_mode;
  if (cfg.seed == "table") {
    seed_mode = RadiiSeed::Table;
  } else if (cfg.seed == "neutral") {
    seed_mode = RadiiSeed::Neutral;
  } else {
    throw SpecParseError("--seed must be table or neutral");
  }
  const std::vector<double> inner = optimize_concentric_radii(cfg.degree, seed_mode);
  std::vector<double> radii = {1.0};
  radii.insert(radii.end(), inner.begin(), inner.end());
  const double logdet = concentric_log_abs_det(cfg.degree, radii);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["degree"] = cfg.degree;
    j["seed"] = cfg.seed;
    j["radii"] = radii;
    j["log_abs_det"] = logdet;
    body << j.dump(2) << '\n';
  } else {
    body << "n=" << cfg.degree << "  seed=" << cfg.seed << "  R = ";
    for (std::size_t i = 0; i < radii.size(); ++i) {
      body << (i ? ", " : "") << io::format_double(radii[i]);
    }
    body << "  log|det| = " << io::format_double(logdet) << '\n';
  }
  emit(cfg.output, body.str(), out);
  return 0;
}

// --------------------------------------------------------------------------
// repro-tables
// --------------------------------------------------------------------------

struct ReproConfig {
  std::string dim = "both";
  std::string grid = "auto";
  std::string golden_2d;
  std::string golden_3d;
  std::string out_dir;
};

struct GoldenCell {
  double value = -1.0;  // < 0 marks "skip"
};

/// Rows per degree: column -> expected value.
using GoldenTable = std::vector<std::pair<int, std::vector<double>>>;

inline GoldenTable load_golden(const std::string& path, int dim) {
  GoldenTable table;
  if (!path.empty()) {
    const io::CsvTable csv = io::read_csv_file(path);
    for (const auto& row : csv.rows) {
      if (row.size() < 3) throw IoError("golden file '" + path + "': short row");
      std::vector<double> cells(row.begin() + 2, row.end());
      table.emplace_back(static_cast<int>(row[0]), std::move(cells));
    }
    return table;
  }
  if (dim == 2) {
    for (const auto& r : golden::table_2d()) {
      table.emplace_back(r.degree, std::vector<double>{r.waldron_cosine,
                                                       r.concentric, r.simplex});
    }
  } else {
    for (const auto& r : golden::table_3d()) {
      table.emplace_back(r.degree,
                         std::vector<double>{r.waldron_cosine, r.simplex});
    }
  }
  return table;
}

inline int run_repro(const ReproConfig& cfg, std::ostream& out) {
  const int grid = parse_grid_flag(cfg.grid);
  bool all_pass = true;

  const auto run_dim = [&](int dim) {
    const double tol = dim == 2 ? 0.02 : 0.03;
    std::vector<FamilySpec> specs;
    std::vector<int> degrees;
    if (dim == 2) {
      specs = {FamilySpec{FamilyKind::Waldron, Weight::cosine(), {}},
               FamilySpec{FamilyKind::Concentric, std::nullopt, {}},
               FamilySpec{FamilyKind::Simplex, std::nullopt, {}}};
      for (int n = 1; n <= 16; ++n) degrees.push_back(n);
    } else {
      specs = {FamilySpec{FamilyKind::WaldronModified3D, Weight::cosine(), {}},
               FamilySpec{FamilyKind::Simplex, std::nullopt, {}}};
      for (int n = 1; n <= 12; ++n) degrees.push_back(n);
    }
    const GoldenTable golden_table =
        load_golden(dim == 2 ? cfg.golden_2d : cfg.golden_3d, dim);

    out << "== " << dim << "D table ==\n";
    const LebesgueTable table = lebesgue_table(specs, degrees, dim, grid);

    if (!cfg.out_dir.empty()) {
      const std::string path =
          cfg.out_dir + "/table_" + std::to_string(dim) + "d.csv";
      std::ofstream f(path);
      if (!f) throw IoError("cannot write '" + path + "'");
      io::write_lebesgue_table_csv(f, table);
      out << "wrote " << path << '\n';
    }

    for (std::size_t r = 0; r < table.degrees.size(); ++r) {
      const int n = table.degrees[r];
      const auto it = std::find_if(golden_table.begin(), golden_table.end(),
                                   [n](const auto& g) { return g.first == n; });
      if (it == golden_table.end()) continue;
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c >= it->second.size()) break;
        const double want = it->second[c];
        if (want < 0.0) continue;  // no reference value
        const double got = table.constants[r][c];
        const double rel = std::abs(got - want) / want;
        const bool pass = std::isfinite(got) && rel <= tol;
        all_pass = all_pass && pass;
        out << (pass ? "PASS" : "FAIL") << "  n=" << n << "  "
            << table.columns[c] << "  got=" << std::fixed
            << std::setprecision(4) << got << "  want=" << want
            << "  rel=" << std::setprecision(5) << rel << '\n';
        out.unsetf(std::ios_base::floatfield);
      }
    }
  };

  if (cfg.dim == "2" || cfg.dim == "both") run_dim(2);
  if (cfg.dim == "3" || cfg.dim == "both") run_dim(3);
  if (cfg.dim != "2" && cfg.dim != "3" && cfg.dim != "both") {
    throw SpecParseError("--dim must be 2, 3, or both");
  }
  out << (all_pass ? "ALL TABLES REPRODUCED\n" : "TABLE MISMATCH\n");
  return all_pass ? 0 : 1;
}

}  // namespace detail

/// Top-level entry point.  Exit 0 on success, 2 on usage/spec errors, 1 on
/// computation errors (diagnostic on err).
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Interpolation nodes, cardinal functions, and Lebesgue "
               "benchmarks on simplices"};
  app.require_subcommand(1);

  detail::GenConfig gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a point set");
  gen_cmd->add_option("--family", gen.family,
                      "simplex|waldron|waldron-mod3d|concentric|spherical");
  gen_cmd->add_option("--weight", gen.weight, "Weight spec (e.g. cosine)");
  gen_cmd->add_option("--simplex", gen.simplex,
                      "equilateral2d|centred3d|unit<d>|csv:<path>");
  gen_cmd->add_option("--radii", gen.radii, "Concentric ring radii r1,r2,...");
  gen_cmd->add_option("--degree", gen.degree, "Degree n")->required();
  gen_cmd->add_flag("--full-sphere", gen.full_sphere,
                    "Reflect the octant set to the whole sphere");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");
  gen_cmd->add_option("--format", gen.format, "csv|json");
  gen_cmd->add_option("--svg", gen.svg, "Also write a scatter plot SVG");

  detail::InterpConfig interp;
  CLI::App* interp_cmd =
      app.add_subcommand("interp", "Sample an interpolant on a lattice");
  interp_cmd->add_option("--scheme", interp.scheme,
                         "simplex|waldron|rational|general");
  interp_cmd->add_option("--family", interp.family,
                         "Node family (defaults to the scheme's native one)");
  interp_cmd->add_option("--weight", interp.weight, "Weight spec");
  interp_cmd->add_option("--simplex", interp.simplex, "Simplex spec");
  interp_cmd->add_option("--degree", interp.degree, "Degree n")->required();
  interp_cmd->add_option("--fn", interp.fn,
                         "f1 (sin(pi*|x|^2)) or csv:<path> node values");
  interp_cmd->add_option("--grid", interp.grid, "Output lattice subdivisions");
  interp_cmd->add_option("-o,--output", interp.output, "Output path");

  detail::ChartConfig chart;
  CLI::App* chart_cmd = app.add_subcommand(
      "chart", "Convert barycentric points through the weight chart");
  chart_cmd->add_option("--weight", chart.weight, "Weight spec");
  chart_cmd->add_option("--simplex", chart.simplex, "Simplex spec");
  chart_cmd->add_option("--direction", chart.direction, "forward|inverse");
  chart_cmd->add_option("-i,--input", chart.input, "Input CSV of points")
      ->required();
  chart_cmd->add_option("-o,--output", chart.output, "Output path");
  chart_cmd->add_flag("--skip-missing", chart.skip_missing,
                      "Emit NaNs instead of failing on unreachable points");

  detail::LebesgueCliConfig leb;
  CLI::App* leb_cmd =
      app.add_subcommand("lebesgue", "Lebesgue-constant comparison table");
  leb_cmd->add_option("--families", leb.families,
                      "Comma list, e.g. simplex,waldron:cosine,concentric");
  leb_cmd->add_option("--degrees", leb.degrees, "e.g. 1..16");
  leb_cmd->add_option("--dim", leb.dim, "2|3");
  leb_cmd->add_option("--grid", leb.grid, "auto or lattice subdivisions");
  leb_cmd->add_option("--scheme", leb.scheme, "default|rational");
  leb_cmd->add_option("-o,--output", leb.output, "Output path");
  leb_cmd->add_option("--format", leb.format, "text|csv|json");

  detail::SpacingConfig spacing;
  CLI::App* spacing_cmd =
      app.add_subcommand("spacing", "Spherical spacing report (JSON)");
  spacing_cmd->add_option("--weight", spacing.weight, "Weight spec");
  spacing_cmd->add_option("--degree", spacing.degree, "Octant set degree");
  spacing_cmd->add_option("--grid", spacing.grid, "Extrema scan subdivisions");
  spacing_cmd->add_option("-o,--output", spacing.output, "Output path");

  detail::RadiiConfig radii;
  CLI::App* radii_cmd =
      app.add_subcommand("radii", "Concentric ring radii: table or optimizer");
  radii_cmd->add_flag("--table", radii.table, "Print the built-in radii");
  radii_cmd->add_option("--degree", radii.degree, "Optimize radii for degree n");
  radii_cmd->add_option("--seed", radii.seed, "table|neutral start");
  radii_cmd->add_option("--format", radii.format, "text|csv|json");
  radii_cmd->add_option("-o,--output", radii.output, "Output path");

  detail::ReproConfig repro;
  CLI::App* repro_cmd = app.add_subcommand(
      "repro-tables", "Recompute the benchmark tables and diff against goldens");
  repro_cmd->add_option("--dim", repro.dim, "2|3|both");
  repro_cmd->add_option("--grid", repro.grid, "auto or lattice subdivisions");
  repro_cmd->add_option("--golden-2d", repro.golden_2d, "Override golden CSV");
  repro_cmd->add_option("--golden-3d", repro.golden_3d, "Override golden CSV");
  repro_cmd->add_option("--out-dir", repro.out_dir,
                        "Also write the computed tables here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return detail::run_gen(gen, out);
    if (interp_cmd->parsed()) return detail::run_interp(interp, out);
    if (chart_cmd->parsed()) return detail::run_chart(chart, out);
    if (leb_cmd->parsed()) return detail::run_lebesgue(leb, out);
    if (spacing_cmd->parsed()) return detail::run_spacing(spacing, out);
    if (radii_cmd->parsed()) return detail::run_radii(radii, out);
    if (repro_cmd->parsed()) return detail::run_repro(repro, out);
  } catch (const SpecParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

inline int run(int argc, const char* const* argv) {
  return run(argc, argv, std::cout, std::cerr);
}

}  // namespace waldron::cli
