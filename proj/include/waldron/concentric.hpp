#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <span>
#include <sstream>
#include <vector>

#include "waldron/basis.hpp"
#include "waldron/errors.hpp"
#include "waldron/nelder_mead.hpp"
#include "waldron/points.hpp"
#include "waldron/simplex.hpp"

namespace waldron {

/// One row of the built-in ring-radius table (outermost radius first; a
/// degree divisible by 3 additionally places a node at the origin).
struct ConcentricRadiiRow {
  int degree;
  std::vector<double> radii;
  bool has_origin;
};

/// Reference radii for degrees 1..12, the largest degrees for which tuned
/// values ship with the library.  R_0 = 1 always; the remaining entries were
/// obtained by maximizing the interpolation determinant (see
/// optimize_concentric_radii).
inline const std::vector<ConcentricRadiiRow>& concentric_radii_table() {
  static const std::vector<ConcentricRadiiRow> table = {
      {1, {1.0}, false},
      {2, {1.0}, false},
      {3, {1.0}, true},
      {4, {1.0, (1.0 + 3.0 * std::sqrt(5.0)) / 22.0}, false},
      {5, {1.0, 0.5467133890977183}, false},
      {6, {1.0, 0.6625914730317319}, true},
      {7, {1.0, 0.7392097205159041, 0.2099178922839476}, false},
      {8, {1.0, 0.7926979593397175, 0.3630731196442392}, false},
      {9, {1.0, 0.8314018389721662, 0.4713481792856927}, true},
      {10, {1.0, 0.8603011832477779, 0.5547886858166182, 0.1489400918406532}, false},
      {11, {1.0, 0.8824295392910452, 0.6207291455415433, 0.2691541556591404}, false},
      {12, {1.0, 0.8997282443826207, 0.6734543809542708, 0.3612491207621312}, true},
  };
  return table;
}

/// Number of rings for degree n (ring i has order m = n - 3i).
inline int concentric_ring_count(int n) { return n >= 1 ? (n - 1) / 3 + 1 : 0; }

/// Points on nested equilateral triangles: ring i is the outer triangle
/// scaled by radii[i] and carries 3(n-3i) points, placed on each directed
/// edge at Chebyshev-Lobatto parameters t_k = (1-cos(k pi/m))/2, k = 0..m-1
/// (so triangle corners are taken once).  A node at the origin is appended
/// when n is divisible by 3.  Total count C(n+2,2).
inline NodeFamily concentric_points(int n, std::span<const double> radii = {}) {
  if (n < 0) throw InvalidArgument("concentric_points: degree must be >= 0");
  const Simplex tri = Simplex::equilateral_triangle();
  NodeFamily family{FamilyKind::Concentric, "concentric", n, tri, std::nullopt, {}};
  if (n == 0) {
    family.nodes.push_back(detail::barycentre_node(tri));
    return family;
  }

  const int rings = concentric_ring_count(n);
  std::vector<double> r(radii.begin(), radii.end());
  if (r.empty()) {
    if (n > 12) {
      throw InvalidArgument(
          "concentric_points: no built-in radii beyond degree 12; pass radii "
          "or run the optimizer");
    }
    r = concentric_radii_table()[static_cast<std::size_t>(n - 1)].radii;
  }
  if (static_cast<int>(r.size()) != rings) {
    std::ostringstream msg;
    msg << "concentric_points: degree " << n << " needs " << rings
        << " radii, got " << r.size();
    throw InvalidArgument(msg.str());
  }
  if (std::abs(r[0] - 1.0) > 1e-12) {
    throw InvalidArgument("concentric_points: outer radius must be 1");
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0 && r[i] <= 1.0)) {
      throw InvalidArgument("concentric_points: radii must lie in (0,1]");
    }
    if (i > 0 && !(r[i] < r[i - 1])) {
      throw InvalidArgument("concentric_points: radii must be descending");
    }
  }

  family.nodes.reserve(static_cast<std::size_t>(simplex_lattice_size(n, 2)));
  const Eigen::MatrixXd& v = tri.vertices();
  for (int i = 0; i < rings; ++i) {
    const int m = n - 3 * i;
    for (int edge = 0; edge < 3; ++edge) {
      const Eigen::Vector2d a = r[static_cast<std::size_t>(i)] * v.col(edge);
      const Eigen::Vector2d b = r[static_cast<std::size_t>(i)] * v.col((edge + 1) % 3);
      for (int k = 0; k < m; ++k) {
        const double t = 0.5 * (1.0 - std::cos(std::numbers::pi * k / m));
        Node node;
        node.index = {i, edge * m + k};
        node.cartesian = a + t * (b - a);
        node.barycentric = tri.to_barycentric(node.cartesian);
        family.nodes.push_back(std::move(node));
      }
    }
  }
  if (n % 3 == 0) {
    Node origin;
    origin.index = {rings, 0};
    origin.cartesian = Eigen::Vector2d::Zero();
    origin.barycentric = tri.to_barycentric(origin.cartesian);
    family.nodes.push_back(std::move(origin));
  }
  return family;
}

/// log |det| of the collocation matrix of the degree-n orthogonal basis at
/// the concentric points with the given radii (outer radius included).  The
/// argmax over radii is basis-independent: changing basis multiplies the
/// determinant by a fixed nonzero constant.
inline double concentric_log_abs_det(int n, std::span<const double> radii) {
  const NodeFamily family = concentric_points(n, radii);
  const SimplexBasis basis(n, 2);
  const int N = basis.size();
  Eigen::MatrixXd a(N, N);
  Eigen::VectorXd row(N);
  for (int p = 0; p < N; ++p) {
    basis.eval(family.nodes[static_cast<std::size_t>(p)].barycentric, row.data());
    a.row(p) = row;
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.logAbsDeterminant();
}

/// Starting point for the radii optimizer.  Table: warm-start from the
/// built-in radii (degrees <= 12; falls back to Neutral above).  Neutral:
/// the geometry-only guess R_i = ((s+1-i)/(s+1))^{3/2}, independent of any
/// tuned values.
enum class RadiiSeed { Table, Neutral };

/// Maximize the collocation determinant over the inner radii (R_1..R_s);
/// the outer radius stays 1.  Nelder-Mead with a weak log-barrier keeping
/// 1 > R_1 > ... > R_s > 0.  Returns the inner radii only (empty for n <= 3,
/// where there is nothing to optimize).
inline std::vector<double> optimize_concentric_radii(int n,
                                                     RadiiSeed seed_mode = RadiiSeed::Table,
                                                     NelderMeadOptions opts = {
                                                         .max_iterations = 6000,
                                                         .initial_step = 0.02,
                                                     }) {
  if (n < 1) throw InvalidArgument("optimize_concentric_radii: degree >= 1");
  const int s = concentric_ring_count(n) - 1;
  if (s < 1) return {};

  constexpr double kBarrier = 1e-10;
  auto objective = [n, s](const Eigen::VectorXd& inner) -> double {
    std::vector<double> radii(static_cast<std::size_t>(s) + 1, 1.0);
    double prev = 1.0;
    double barrier = 0.0;
    for (int i = 0; i < s; ++i) {
      const double ri = inner(i);
      const double gap = prev - ri;
      if (!(gap > 0.0) || !(ri > 0.0)) {
        return std::numeric_limits<double>::infinity();
      }
      barrier -= std::log(gap);
      radii[static_cast<std::size_t>(i) + 1] = ri;
      prev = ri;
    }
    barrier -= std::log(prev);  // R_s > 0
    return -concentric_log_abs_det(n, radii) + kBarrier * barrier;
  };

  Eigen::VectorXd seed(s);
  if (seed_mode == RadiiSeed::Table && n <= 12) {
    const auto& row = concentric_radii_table()[static_cast<std::size_t>(n - 1)];
    for (int i = 0; i < s; ++i) seed(i) = row.radii[static_cast<std::size_t>(i) + 1];
  } else {
    for (int i = 0; i < s; ++i) {
      seed(i) = std::pow(static_cast<double>(s - i) / (s + 1), 1.5);
    }
  }

  const NelderMeadResult result = nelder_mead(objective, seed, opts);
  std::vector<double> best(result.x.data(), result.x.data() + s);
  if (!result.converged) {
    std::ostringstream msg;
    msg << "optimize_concentric_radii: no convergence after "
        << result.iterations << " iterations (degree " << n << ")";
    throw OptimizerError(msg.str(), best, result.value);
  }
  return best;
}

}  // namespace waldron
