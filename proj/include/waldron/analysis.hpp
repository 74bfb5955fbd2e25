#pragma once

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "waldron/concentric.hpp"
#include "waldron/errors.hpp"
#include "waldron/interp.hpp"
#include "waldron/parallel.hpp"
#include "waldron/points.hpp"

namespace waldron {

// ===========================================================================
// Lebesgue function maxima on dense barycentric lattices.
// ===========================================================================

struct LebesgueOptions {
  int threads = 0;  // 0 = WALDRON_THREADS / hardware
  /// Restrict the grid to a fundamental domain of coordinate permutations.
  /// Valid for node sets invariant under vertex permutations, which all
  /// built-in families are; cuts work by ~(d+1)!.
  bool symmetry_reduce = true;
  /// Adaptive mode doubles the grid until the constant changes by less than
  /// this relative amount.
  double stability_rel = 0.005;
  int max_doublings = 6;
  /// Starting resolution for adaptive mode; 0 picks max(50n,400) in 2D and
  /// max(15n,120) in 3D.
  int initial_grid = 0;
  /// Lattice points per linear-algebra block.
  int block_columns = 1024;
};

struct LebesgueReport {
  std::string family;
  std::string scheme;
  int dim = 0;
  int degree = 0;
  std::int64_t node_count = 0;
  int grid = 0;
  double constant = 0.0;
  Eigen::VectorXd argmax;  // barycentric
  double elapsed_seconds = 0.0;
  /// Grid points skipped because the rational denominator vanished.
  std::int64_t pole_skips = 0;
};

namespace detail {

/// Sum of |cardinal| over all nodes, for a batch of barycentric points.
class CardinalSums {
 public:
  virtual ~CardinalSums() = default;
  virtual int node_count() const = 0;
  /// lambdas: (d+1) x m; out: m column sums of absolute cardinal values.
  /// Pole columns (rational scheme only) are set to -infinity and counted.
  virtual void eval_sums(const Eigen::MatrixXd& lambdas, Eigen::VectorXd& out,
                         std::int64_t& poles) const = 0;
};

class SimplexCardinalSums final : public CardinalSums {
 public:
  explicit SimplexCardinalSums(const NodeFamily& family)
      : cards_(family.degree, family.simplex.dim()) {}
  int node_count() const override { return cards_.size(); }
  void eval_sums(const Eigen::MatrixXd& lambdas, Eigen::VectorXd& out,
                 std::int64_t&) const override {
    thread_local std::vector<double> values;
    values.resize(static_cast<std::size_t>(cards_.size()));
    for (Eigen::Index j = 0; j < lambdas.cols(); ++j) {
      cards_.eval(lambdas.col(j), values.data());
      double sum = 0.0;
      for (double v : values) sum += std::abs(v);
      out(j) = sum;
    }
  }

 private:
  SimplexCardinals cards_;
};

class WaldronCardinalSums final : public CardinalSums {
 public:
  WaldronCardinalSums(const NodeFamily& family, bool rational)
      : cards_(family.simplex, *family.weight, family.degree),
        rational_(rational) {}
  int node_count() const override { return cards_.size(); }
  void eval_sums(const Eigen::MatrixXd& lambdas, Eigen::VectorXd& out,
                 std::int64_t& poles) const override {
    thread_local std::vector<double> values;
    values.resize(static_cast<std::size_t>(cards_.size()));
    for (Eigen::Index j = 0; j < lambdas.cols(); ++j) {
      if (rational_) {
        try {
          cards_.eval_rational(lambdas.col(j), values.data());
        } catch (const PoleError&) {
          ++poles;
          out(j) = -std::numeric_limits<double>::infinity();
          continue;
        }
      } else {
        cards_.eval(lambdas.col(j), values.data());
      }
      double sum = 0.0;
      for (double v : values) sum += std::abs(v);
      out(j) = sum;
    }
  }

 private:
  WaldronCardinals cards_;
  bool rational_;
};

class GeneralCardinalSums final : public CardinalSums {
 public:
  explicit GeneralCardinalSums(const NodeFamily& family) : cards_(family) {}
  int node_count() const override { return cards_.size(); }
  void eval_sums(const Eigen::MatrixXd& lambdas, Eigen::VectorXd& out,
                 std::int64_t&) const override {
    const int n = cards_.size();
    const Eigen::Index m = lambdas.cols();
    thread_local Eigen::MatrixXd basis_block, card_block;
    basis_block.resize(n, m);
    card_block.resize(n, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      cards_.basis().eval(lambdas.col(j), basis_block.col(j).data());
    }
    cards_.eval_block(basis_block, card_block);
    out = card_block.cwiseAbs().colwise().sum();
  }

 private:
  GeneralCardinals cards_;
};

inline std::unique_ptr<CardinalSums> make_cardinal_sums(
    const NodeFamily& family, Scheme scheme) {
  switch (scheme) {
    case Scheme::SimplexExplicit:
      if (family.kind != FamilyKind::Simplex) {
        throw InvalidArgument(
            "lebesgue: explicit lattice cardinals need simplex points");
      }
      return std::make_unique<SimplexCardinalSums>(family);
    case Scheme::WaldronExplicit:
    case Scheme::WaldronRational:
      if (family.kind != FamilyKind::Waldron || !family.weight) {
        throw InvalidArgument(
            "lebesgue: explicit/rational cardinals need Waldron points");
      }
      return std::make_unique<WaldronCardinalSums>(
          family, scheme == Scheme::WaldronRational);
    case Scheme::GeneralPolynomial:
      return std::make_unique<GeneralCardinalSums>(family);
  }
  throw Error("unreachable");
}

/// Visit the lattice {beta/M : |beta| = M} slice with beta_1 = b1, either the
/// whole slice or the sorted fundamental domain beta_1 <= ... <= beta_{d+1}.
template <class F>
void visit_lattice_slice(int M, int d, bool reduce, int b1, F&& visit) {
  int beta[4] = {b1, 0, 0, 0};
  const int rest = M - b1;
  switch (d) {
    case 1:
      if (!reduce || rest >= b1) {
        beta[1] = rest;
        visit(beta);
      }
      return;
    case 2: {
      const int lo = reduce ? b1 : 0;
      const int hi = reduce ? rest / 2 : rest;
      for (int b2 = lo; b2 <= hi; ++b2) {
        const int b3 = rest - b2;
        if (reduce && b3 < b2) break;
        beta[1] = b2;
        beta[2] = b3;
        visit(beta);
      }
      return;
    }
    case 3: {
      const int lo2 = reduce ? b1 : 0;
      for (int b2 = lo2; b2 <= (reduce ? rest / 3 : rest); ++b2) {
        const int rest2 = rest - b2;
        const int lo3 = reduce ? b2 : 0;
        for (int b3 = lo3; b3 <= (reduce ? rest2 / 2 : rest2); ++b3) {
          const int b4 = rest2 - b3;
          if (reduce && b4 < b3) break;
          beta[1] = b2;
          beta[2] = b3;
          beta[3] = b4;
          visit(beta);
        }
      }
      return;
    }
    default:
      throw InvalidArgument("lebesgue grid: dim must be 1, 2, or 3");
  }
}

struct GridMax {
  double value = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd argmax;
  std::int64_t poles = 0;
};

/// Deterministic grid maximum of the cardinal-sum function: slices are
/// processed independently (parallel), then reduced in slice order, with
/// strict comparisons, so the result does not depend on the thread count.
inline GridMax lebesgue_grid_max(const CardinalSums& sums, int dim, int M,
                                 const LebesgueOptions& opts) {
  const bool reduce = opts.symmetry_reduce;
  const int slices = (reduce ? M / (dim + 1) : M) + 1;
  std::vector<GridMax> per_slice(static_cast<std::size_t>(slices));

  parallel_for(
      slices,
      [&](std::int64_t b1) {
        thread_local std::vector<int> betas;
        betas.clear();
        visit_lattice_slice(M, dim, reduce, static_cast<int>(b1),
                            [&](const int* beta) {
                              for (int i = 0; i <= dim; ++i) betas.push_back(beta[i]);
                            });
        const std::int64_t count =
            static_cast<std::int64_t>(betas.size()) / (dim + 1);
        GridMax local;
        Eigen::MatrixXd lambdas;
        Eigen::VectorXd col_sums;
        std::int64_t best_offset = -1;
        for (std::int64_t start = 0; start < count;
             start += opts.block_columns) {
          const std::int64_t m =
              std::min<std::int64_t>(opts.block_columns, count - start);
          lambdas.resize(dim + 1, m);
          for (std::int64_t c = 0; c < m; ++c) {
            for (int i = 0; i <= dim; ++i) {
              lambdas(i, c) =
                  static_cast<double>(betas[static_cast<std::size_t>(
                      (start + c) * (dim + 1) + i)]) /
                  M;
            }
          }
          col_sums.resize(m);
          sums.eval_sums(lambdas, col_sums, local.poles);
          for (std::int64_t c = 0; c < m; ++c) {
            if (col_sums(c) > local.value) {
              local.value = col_sums(c);
              best_offset = start + c;
            }
          }
        }
        if (best_offset >= 0) {
          local.argmax.resize(dim + 1);
          for (int i = 0; i <= dim; ++i) {
            local.argmax(i) = static_cast<double>(betas[static_cast<std::size_t>(
                                  best_offset * (dim + 1) + i)]) /
                              M;
          }
        }
        per_slice[static_cast<std::size_t>(b1)] = std::move(local);
      },
      opts.threads);

  GridMax total;
  for (const GridMax& s : per_slice) {
    total.poles += s.poles;
    if (s.value > total.value) {
      total.value = s.value;
      total.argmax = s.argmax;
    }
  }
  return total;
}

inline int default_initial_grid(int dim, int degree) {
  return dim >= 3 ? std::max(15 * degree, 120) : std::max(50 * degree, 400);
}

}  // namespace detail

/// Lebesgue constant estimate at a fixed lattice resolution M: the maximum
/// of sum |l_alpha| over {beta/M : |beta| = M}.  A lower bound on the true
/// constant, non-decreasing in M along the nested sequence M, 2M, 4M, ...
inline LebesgueReport lebesgue_constant(const NodeFamily& family, Scheme scheme,
                                        int M, LebesgueOptions opts = {}) {
  if (M < 1) throw InvalidArgument("lebesgue_constant: grid must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const auto sums = detail::make_cardinal_sums(family, scheme);
  const detail::GridMax grid =
      detail::lebesgue_grid_max(*sums, family.simplex.dim(), M, opts);
  LebesgueReport report;
  report.family = family.label;
  report.scheme = scheme_name(scheme);
  report.dim = family.simplex.dim();
  report.degree = family.degree;
  report.node_count = static_cast<std::int64_t>(family.size());
  report.grid = M;
  report.constant = grid.value;
  report.argmax = grid.argmax;
  report.pole_skips = grid.poles;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

/// Adaptive resolution: double the lattice until the constant is stable to
/// opts.stability_rel (default 0.5%).
inline LebesgueReport lebesgue_constant_auto(const NodeFamily& family,
                                             Scheme scheme,
                                             LebesgueOptions opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const int dim = family.simplex.dim();
  const auto sums = detail::make_cardinal_sums(family, scheme);
  int M = opts.initial_grid > 0 ? opts.initial_grid
                                : detail::default_initial_grid(dim, family.degree);
  detail::GridMax grid = detail::lebesgue_grid_max(*sums, dim, M, opts);
  std::int64_t poles = grid.poles;
  for (int k = 0; k < opts.max_doublings; ++k) {
    const int M2 = 2 * M;
    detail::GridMax finer = detail::lebesgue_grid_max(*sums, dim, M2, opts);
    poles += finer.poles;
    const bool stable =
        std::abs(finer.value - grid.value) <= opts.stability_rel * finer.value;
    M = M2;
    grid = std::move(finer);
    if (stable) break;
  }
  LebesgueReport report;
  report.family = family.label;
  report.scheme = scheme_name(scheme);
  report.dim = dim;
  report.degree = family.degree;
  report.node_count = static_cast<std::int64_t>(family.size());
  report.grid = M;
  report.constant = grid.value;
  report.argmax = grid.argmax;
  report.pole_skips = poles;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

// ===========================================================================
// Family descriptors and comparison tables.
// ===========================================================================

/// Degree-independent description of a node family, instantiable per degree.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Simplex;
  std::optional<Weight> weight;
  /// Concentric only: custom radii (outer first); empty uses the built-in
  /// table for degrees <= 12.
  std::vector<double> radii;

  std::string label() const {
    switch (kind) {
      case FamilyKind::Simplex: return "simplex";
      case FamilyKind::Waldron: return "waldron:" + weight->name();
      case FamilyKind::WaldronModified3D:
        return "waldron-mod3d:" + weight->name();
      case FamilyKind::Concentric: return "concentric";
      case FamilyKind::SphericalWaldron: return "spherical:" + weight->name();
    }
    return "?";
  }
};

inline NodeFamily make_family(const FamilySpec& spec, const Simplex& simplex,
                              int degree) {
  switch (spec.kind) {
    case FamilyKind::Simplex:
      return simplex_points(simplex, degree);
    case FamilyKind::Waldron:
      if (!spec.weight) throw InvalidArgument("waldron family needs a weight");
      return waldron_points(simplex, degree, *spec.weight);
    case FamilyKind::WaldronModified3D:
      if (!spec.weight) throw InvalidArgument("waldron family needs a weight");
      return waldron_points_modified_3d(simplex, degree, *spec.weight);
    case FamilyKind::Concentric:
      if (simplex.dim() != 2) {
        throw InvalidArgument("concentric points are 2D only");
      }
      return concentric_points(degree, spec.radii);
    case FamilyKind::SphericalWaldron:
      throw InvalidArgument(
          "spherical points are not a simplex family; use the spherical API");
  }
  throw Error("unreachable");
}

/// Default interpolation scheme for benchmarking a family: the explicit
/// lattice formula where it exists, polynomial collocation otherwise.
inline Scheme benchmark_scheme(FamilyKind kind) {
  return kind == FamilyKind::Simplex ? Scheme::SimplexExplicit
                                     : Scheme::GeneralPolynomial;
}

struct LebesgueTable {
  std::vector<std::string> columns;
  std::vector<int> degrees;
  std::vector<std::int64_t> node_counts;                // per degree
  std::vector<std::vector<double>> constants;           // [degree][family]
  std::vector<LebesgueReport> reports;                  // flattened, row-major
};

/// The side-by-side comparison table: one row per degree, one column per
/// family.  Unsupported combinations (concentric beyond the radii table)
/// yield NaN.  grid = 0 selects the adaptive rule per degree.
inline LebesgueTable lebesgue_table(std::span<const FamilySpec> families,
                                    std::span<const int> degrees, int dim,
                                    int grid = 0, LebesgueOptions opts = {}) {
  const Simplex simplex = dim == 3 ? Simplex::centred_tetrahedron()
                                   : Simplex::equilateral_triangle();
  LebesgueTable table;
  for (const FamilySpec& spec : families) table.columns.push_back(spec.label());
  for (int n : degrees) {
    table.degrees.push_back(n);
    table.node_counts.push_back(simplex_lattice_size(n, dim));
    std::vector<double> row;
    for (const FamilySpec& spec : families) {
      try {
        const NodeFamily family = make_family(spec, simplex, n);
        const Scheme scheme = benchmark_scheme(spec.kind);
        LebesgueReport report =
            grid > 0 ? lebesgue_constant(family, scheme, grid, opts)
                     : lebesgue_constant_auto(family, scheme, opts);
        row.push_back(report.constant);
        table.reports.push_back(std::move(report));
      } catch (const InvalidArgument&) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    table.constants.push_back(std::move(row));
  }
  return table;
}

// ===========================================================================
// Spacing analysis for the spherical point sets.
// ===========================================================================

/// D^2 for the difference of the first two partial derivatives of the
/// normalized baryweight lift X(theta), both in the closed form (specific to
/// the cosine weight) and by central finite differences of X.
struct SpacingSample {
  double closed_form_sq = std::numeric_limits<double>::quiet_NaN();
  /// NaN when theta is within fd_step of the boundary.
  double finite_difference_sq = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {
inline Eigen::Vector3d baryweight_lift(const Weight& w,
                                       const Eigen::Vector3d& theta) {
  Eigen::Vector3d v(w(theta(0)), w(theta(1)), w(theta(2)));
  const double sum = v.sum();
  return (v.array().sqrt() / std::sqrt(sum)).matrix();
}
}  // namespace detail

inline SpacingSample spacing_D(const Weight& w, const Eigen::Vector3d& theta,
                               double fd_step = 1e-6) {
  if (!is_inside_simplex(theta) || std::abs(theta.sum() - 1.0) > 1e-9) {
    throw WeightDomainError("spacing_D: theta outside T_2");
  }
  const double w1 = w(std::clamp(theta(0), 0.0, 1.0));
  const double w2 = w(std::clamp(theta(1), 0.0, 1.0));
  const double w3 = w(std::clamp(theta(2), 0.0, 1.0));
  const double sum = w1 + w2 + w3;
  if (!(sum > 0.0)) {
    throw WeightDomainError("spacing_D: weight sum vanishes at theta");
  }
  SpacingSample out;
  const double half_pi = 0.5 * std::numbers::pi;
  out.closed_form_sq =
      half_pi * half_pi * (1.0 + w3 * (1.0 - w1 - w2)) / (sum * sum);
  const double h = fd_step;
  if (theta(0) >= h && theta(1) >= h && theta(0) + h <= 1.0 &&
      theta(1) + h <= 1.0) {
    const Eigen::Vector3d plus(theta(0) + h, theta(1) - h, theta(2));
    const Eigen::Vector3d minus(theta(0) - h, theta(1) + h, theta(2));
    const Eigen::Vector3d diff =
        (detail::baryweight_lift(w, plus) - detail::baryweight_lift(w, minus)) /
        (2.0 * h);
    out.finite_difference_sq = diff.squaredNorm();
  }
  return out;
}

struct SpacingReport {
  std::string weight;
  // Grid extrema of D^2 / (pi/2)^2 over T_2.
  int grid = 0;
  double min_ratio_sq = std::numeric_limits<double>::quiet_NaN();
  double max_ratio_sq = std::numeric_limits<double>::quiet_NaN();
  Eigen::Vector3d argmax_theta = Eigen::Vector3d::Constant(
      std::numeric_limits<double>::quiet_NaN());
  /// theta_3 at which the maximum is attained analytically: w^{-1}(4-2*sqrt(3)).
  double critical_theta3 = std::numeric_limits<double>::quiet_NaN();
  // Neighboring-node great-circle distances on the octant set of `degree`.
  int degree = 0;
  double neighbor_min = std::numeric_limits<double>::quiet_NaN();
  double neighbor_max = std::numeric_limits<double>::quiet_NaN();
  double neighbor_min_ratio = std::numeric_limits<double>::quiet_NaN();
  double neighbor_max_ratio = std::numeric_limits<double>::quiet_NaN();
};

/// Extrema of D^2/(pi/2)^2 over the lattice {beta/M} of T_2 (boundary
/// included; the minimum 1 is attained on the edges for complementary
/// weights).
inline SpacingReport spacing_extrema(const Weight& w, int grid_M) {
  if (grid_M < 1) throw InvalidArgument("spacing_extrema: grid must be >= 1");
  SpacingReport report;
  report.weight = w.name();
  report.grid = grid_M;
  const double half_pi_sq = 0.25 * std::numbers::pi * std::numbers::pi;
  double best = -std::numeric_limits<double>::infinity();
  double worst = std::numeric_limits<double>::infinity();
  Eigen::Vector3d arg = Eigen::Vector3d::Zero();
  for (int b1 = 0; b1 <= grid_M; ++b1) {
    for (int b2 = 0; b2 <= grid_M - b1; ++b2) {
      const Eigen::Vector3d theta(static_cast<double>(b1) / grid_M,
                                  static_cast<double>(b2) / grid_M,
                                  static_cast<double>(grid_M - b1 - b2) / grid_M);
      const double ratio =
          spacing_D(w, theta).closed_form_sq / half_pi_sq;
      if (ratio > best) {
        best = ratio;
        arg = theta;
      }
      worst = std::min(worst, ratio);
    }
  }
  report.min_ratio_sq = worst;
  report.max_ratio_sq = best;
  report.argmax_theta = arg;
  report.critical_theta3 = w.inverse(4.0 - 2.0 * std::sqrt(3.0));
  return report;
}

/// Great-circle distances between octant points whose indices differ by +1
/// in one slot and -1 in another, reported against the 1D scale pi/(2n).
inline SpacingReport neighbor_spacing(const Weight& w, int degree) {
  if (degree < 2) throw InvalidArgument("neighbor_spacing: degree must be >= 2");
  SpacingReport report;
  report.weight = w.name();
  report.degree = degree;
  const std::vector<Eigen::Vector3d> points =
      spherical_waldron_points(degree, w);
  const std::vector<MultiIndex> indices = enumerate_multi_indices(degree, 2);
  std::map<MultiIndex, std::size_t> rank;
  for (std::size_t k = 0; k < indices.size(); ++k) rank[indices[k]] = k;

  double dmin = std::numeric_limits<double>::infinity();
  double dmax = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const MultiIndex& alpha = indices[k];
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (alpha[static_cast<std::size_t>(j)] < 1) continue;
        MultiIndex beta = alpha;
        ++beta[static_cast<std::size_t>(i)];
        --beta[static_cast<std::size_t>(j)];
        const double dot =
            points[k].dot(points[rank.at(beta)]);
        const double dist = std::acos(std::clamp(dot, -1.0, 1.0));
        dmin = std::min(dmin, dist);
        dmax = std::max(dmax, dist);
      }
    }
  }
  const double unit = 0.5 * std::numbers::pi / degree;
  report.neighbor_min = dmin;
  report.neighbor_max = dmax;
  report.neighbor_min_ratio = dmin / unit;
  report.neighbor_max_ratio = dmax / unit;
  return report;
}

}  // namespace waldron
