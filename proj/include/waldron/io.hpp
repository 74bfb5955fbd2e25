#pragma once

#include <Eigen/Dense>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "waldron/analysis.hpp"
#include "waldron/concentric.hpp"
#include "waldron/errors.hpp"
#include "waldron/points.hpp"
#include "waldron/simplex.hpp"
#include "waldron/weights.hpp"

namespace waldron::io {

/// Shortest representation that round-trips a double (17 significant digits).
inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline void write_csv_row(std::ostream& os, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << format_double(values[i]);
  }
  os << '\n';
}

/// Numeric CSV reader: optional non-numeric header line, then rows of
/// comma-separated doubles (uniform column count).
struct CsvTable {
  std::vector<std::string> header;  // empty when the file starts with numbers
  std::vector<std::vector<double>> rows;
};

inline CsvTable read_csv(std::istream& is, const std::string& origin = "csv") {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    bool numeric = true;
    for (const std::string& c : cells) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(c, &used));
        while (used < c.size() && std::isspace(static_cast<unsigned char>(c[used]))) ++used;
        if (used != c.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (!numeric) {
      if (table.rows.empty() && table.header.empty()) {
        table.header = std::move(cells);
        continue;
      }
      std::ostringstream msg;
      msg << origin << ":" << line_no << ": non-numeric value in data row";
      throw IoError(msg.str());
    }
    if (!table.rows.empty() && row.size() != table.rows.front().size()) {
      std::ostringstream msg;
      msg << origin << ":" << line_no << ": expected "
          << table.rows.front().size() << " columns, got " << row.size();
      throw IoError(msg.str());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_csv(in, path);
}

/// Node listing with the index, Cartesian, and barycentric coordinates.
inline void write_nodes_csv(std::ostream& os, const NodeFamily& family) {
  const int d = family.simplex.dim();
  for (int j = 0; j <= d; ++j) os << "alpha_" << j + 1 << ',';
  for (int j = 0; j < d; ++j) os << "x_" << j + 1 << ',';
  for (int j = 0; j <= d; ++j) {
    os << "lambda_" << j + 1 << (j == d ? '\n' : ',');
  }
  for (const Node& node : family.nodes) {
    for (int j = 0; j <= d; ++j) {
      os << (j < static_cast<int>(node.index.size())
                 ? node.index[static_cast<std::size_t>(j)]
                 : 0)
         << ',';
    }
    for (int j = 0; j < d; ++j) os << format_double(node.cartesian(j)) << ',';
    for (int j = 0; j <= d; ++j) {
      os << format_double(node.barycentric(j)) << (j == d ? '\n' : ',');
    }
  }
}

inline void write_sphere_csv(std::ostream& os,
                             std::span<const Eigen::Vector3d> points) {
  os << "x,y,z\n";
  for (const Eigen::Vector3d& p : points) {
    os << format_double(p(0)) << ',' << format_double(p(1)) << ','
       << format_double(p(2)) << '\n';
  }
}

inline void write_lebesgue_table_csv(std::ostream& os, const LebesgueTable& t) {
  os << "degree,node_count";
  for (const std::string& c : t.columns) os << ',' << c;
  os << '\n';
  for (std::size_t r = 0; r < t.degrees.size(); ++r) {
    os << t.degrees[r] << ',' << t.node_counts[r];
    for (double v : t.constants[r]) os << ',' << format_double(v);
    os << '\n';
  }
}

inline std::string format_lebesgue_table_text(const LebesgueTable& t) {
  std::ostringstream os;
  os << std::setw(6) << "n" << std::setw(8) << "N";
  for (const std::string& c : t.columns) os << std::setw(22) << c;
  os << '\n';
  for (std::size_t r = 0; r < t.degrees.size(); ++r) {
    os << std::setw(6) << t.degrees[r] << std::setw(8) << t.node_counts[r];
    for (double v : t.constants[r]) {
      std::ostringstream cell;
      if (std::isnan(v)) {
        cell << "-";
      } else {
        cell << std::fixed << std::setprecision(2) << v;
      }
      os << std::setw(22) << cell.str();
    }
    os << '\n';
  }
  return os.str();
}

inline void write_radii_table_csv(std::ostream& os) {
  os << "degree,rings,has_origin,radii\n";
  for (const ConcentricRadiiRow& row : concentric_radii_table()) {
    os << row.degree << ',' << row.radii.size() << ','
       << (row.has_origin ? 1 : 0) << ",\"";
    for (std::size_t i = 0; i < row.radii.size(); ++i) {
      if (i) os << ';';
      os << format_double(row.radii[i]);
    }
    os << "\"\n";
  }
}

// ---------------------------------------------------------------------------
// Spec strings
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

/// Recursive-descent weight parser over ':'-separated tokens.
inline Weight parse_weight_tokens(const std::vector<std::string>& toks,
                                  std::size_t& pos, const std::string& spec) {
  if (pos >= toks.size()) {
    throw SpecParseError("weight spec '" + spec + "': unexpected end");
  }
  const std::string tok = toks[pos++];
  if (tok == "identity") return Weight::identity();
  if (tok == "cosine") return Weight::cosine();
  if (tok == "quad" || tok == "quadratic") return Weight::quadratic_piecewise();
  if (tok == "density") {
    if (pos >= toks.size() || toks[pos].rfind("file=", 0) != 0) {
      throw SpecParseError("weight spec '" + spec +
                           "': density needs file=<path>");
    }
    const std::string path = toks[pos++].substr(5);
    const CsvTable csv = read_csv_file(path);
    std::vector<std::pair<double, double>> samples;
    for (const auto& row : csv.rows) {
      if (row.size() != 2) {
        throw SpecParseError("density file '" + path +
                             "': expected two columns t,F(t)");
      }
      samples.emplace_back(row[0], row[1]);
    }
    return Weight::from_density_samples(samples, {}, "density:" + path);
  }
  if (tok == "convex") {
    if (pos >= toks.size() || toks[pos].rfind("t=", 0) != 0) {
      throw SpecParseError("weight spec '" + spec + "': convex needs t=<t>");
    }
    double t = 0.0;
    try {
      t = std::stod(toks[pos].substr(2));
    } catch (const std::exception&) {
      throw SpecParseError("weight spec '" + spec + "': bad t value '" +
                           toks[pos] + "'");
    }
    ++pos;
    const Weight w0 = parse_weight_tokens(toks, pos, spec);
    const Weight w1 = parse_weight_tokens(toks, pos, spec);
    return Weight::convex(t, w0, w1);
  }
  throw SpecParseError("weight spec '" + spec + "': unknown weight '" + tok +
                       "'");
}

}  // namespace detail

/// `identity`, `cosine`, `quad`, `convex:t=<t>:<w0>:<w1>` (w0/w1 recursive),
/// `density:file=<path>` with CSV rows t,F(t) on [0,1/2].
inline Weight parse_weight_spec(const std::string& spec) {
  const std::vector<std::string> toks = detail::split(spec, ':');
  std::size_t pos = 0;
  const Weight w = detail::parse_weight_tokens(toks, pos, spec);
  if (pos != toks.size()) {
    throw SpecParseError("weight spec '" + spec + "': trailing tokens");
  }
  return w;
}

/// `equilateral2d`, `centred3d`, `unit<d>` (d = 1..3), or `csv:<path>` with
/// one vertex per row (d+1 rows of d coordinates).
inline Simplex parse_simplex_spec(const std::string& spec) {
  if (spec == "equilateral2d") return Simplex::equilateral_triangle();
  if (spec == "centred3d") return Simplex::centred_tetrahedron();
  if (spec.rfind("unit", 0) == 0) {
    try {
      return Simplex::unit(std::stoi(spec.substr(4)));
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception&) {
      throw SpecParseError("simplex spec '" + spec + "': bad dimension");
    }
  }
  if (spec.rfind("csv:", 0) == 0) {
    const std::string path = spec.substr(4);
    const CsvTable csv = read_csv_file(path);
    const std::size_t rows = csv.rows.size();
    if (rows < 2 || csv.rows.front().size() + 1 != rows) {
      throw SpecParseError("simplex file '" + path +
                           "': need d+1 rows of d coordinates");
    }
    const int d = static_cast<int>(rows) - 1;
    Eigen::MatrixXd v(d, d + 1);
    for (int c = 0; c <= d; ++c) {
      for (int r = 0; r < d; ++r) {
        v(r, c) = csv.rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      }
    }
    return Simplex(std::move(v));
  }
  throw SpecParseError("simplex spec '" + spec +
                       "': expected equilateral2d, centred3d, unit<d>, or "
                       "csv:<path>");
}

/// `5`, `1..16`, or a comma list of either (`1..4,8,12`), ascending output.
inline std::vector<int> parse_degree_spec(const std::string& spec) {
  std::vector<int> degrees;
  for (const std::string& part : detail::split(spec, ',')) {
    const std::size_t dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        degrees.push_back(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dots));
        const int hi = std::stoi(part.substr(dots + 2));
        if (hi < lo) {
          throw SpecParseError("degree spec '" + spec + "': empty range '" +
                               part + "'");
        }
        for (int n = lo; n <= hi; ++n) degrees.push_back(n);
      }
    } catch (const SpecParseError&) {
      throw;
    } catch (const std::exception&) {
      throw SpecParseError("degree spec '" + spec + "': bad entry '" + part +
                           "'");
    }
  }
  if (degrees.empty()) throw SpecParseError("degree spec '" + spec + "': empty");
  return degrees;
}

/// `simplex`, `concentric`, `waldron:<weight>`, `waldron-mod3d:<weight>`.
inline FamilySpec parse_family_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (head == "simplex" || head == "concentric") {
    if (colon != std::string::npos) {
      throw SpecParseError("family spec '" + spec + "': no weight expected");
    }
    return FamilySpec{head == "simplex" ? FamilyKind::Simplex
                                        : FamilyKind::Concentric,
                      std::nullopt,
                      {}};
  }
  if (head == "waldron" || head == "waldron-mod3d") {
    if (colon == std::string::npos) {
      throw SpecParseError("family spec '" + spec +
                           "': expected " + head + ":<weight>");
    }
    const Weight w = parse_weight_spec(spec.substr(colon + 1));
    return FamilySpec{head == "waldron" ? FamilyKind::Waldron
                                        : FamilyKind::WaldronModified3D,
                      w,
                      {}};
  }
  throw SpecParseError("family spec '" + spec + "': unknown family '" + head +
                       "'");
}

inline std::vector<FamilySpec> parse_family_list(const std::string& spec) {
  std::vector<FamilySpec> out;
  for (const std::string& part : detail::split(spec, ',')) {
    out.push_back(parse_family_spec(part));
  }
  if (out.empty()) throw SpecParseError("family list '" + spec + "': empty");
  return out;
}

// ---------------------------------------------------------------------------
// Minimal SVG scatter (2D point sets).
// ---------------------------------------------------------------------------

inline void write_scatter_svg(std::ostream& os,
                              std::span<const Eigen::Vector2d> points,
                              double extent = 1.1) {
  const int size = 640;
  const double scale = size / (2.0 * extent);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Eigen::Vector2d& p : points) {
    const double cx = (p(0) + extent) * scale;
    const double cy = (extent - p(1)) * scale;
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace waldron::io
