#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "waldron/errors.hpp"

namespace waldron {

/// A non-degenerate simplex in R^d with cached affine solve for barycentric
/// coordinates.  Immutable after construction; safe for concurrent use.
class Simplex {
 public:
  /// vertices: d x (d+1), one vertex per column.
  explicit Simplex(Eigen::MatrixXd vertices) : verts_(std::move(vertices)) {
    const auto d = verts_.rows();
    if (d < 1 || verts_.cols() != d + 1) {
      throw InvalidArgument("Simplex: vertices must be d x (d+1)");
    }
    Eigen::MatrixXd edges(d, d);
    double norm_product = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      edges.col(i) = verts_.col(i) - verts_.col(d);
      norm_product *= edges.col(i).norm();
    }
    lu_.compute(edges);
    // Hadamard bound: |det| <= product of edge norms, so this ratio is a
    // scale-free degeneracy measure.
    if (!(std::abs(lu_.determinant()) > 1e-12 * norm_product)) {
      throw InvalidArgument("Simplex: vertices are affinely dependent");
    }
    diameter_ = 0.0;
    for (Eigen::Index i = 0; i <= d; ++i) {
      for (Eigen::Index j = i + 1; j <= d; ++j) {
        diameter_ = std::max(diameter_, (verts_.col(i) - verts_.col(j)).norm());
      }
    }
  }

  /// Equilateral triangle centred at the origin with vertices
  /// (-sqrt(3)/2, -1/2), (sqrt(3)/2, -1/2), (0, 1).
  static Simplex equilateral_triangle() {
    Eigen::MatrixXd v(2, 3);
    const double s = std::sqrt(3.0) / 2.0;
    v << -s, s, 0.0, -0.5, -0.5, 1.0;
    return Simplex(std::move(v));
  }

  /// Regular tetrahedron centred at the origin with unit circumradius.
  static Simplex centred_tetrahedron() {
    Eigen::MatrixXd v(3, 4);
    const double s = 1.0 / std::sqrt(3.0);
    v << s, s, -s, -s,
         s, -s, s, -s,
         s, -s, -s, s;
    return Simplex(std::move(v));
  }

  /// Standard unit simplex: vertices e_1, ..., e_d, 0.
  static Simplex unit(int dim) {
    if (dim < 1) throw InvalidArgument("Simplex::unit: dim must be >= 1");
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, dim + 1);
    v.topLeftCorner(dim, dim).setIdentity();
    return Simplex(std::move(v));
  }

  int dim() const { return static_cast<int>(verts_.rows()); }
  const Eigen::MatrixXd& vertices() const { return verts_; }
  double diameter() const { return diameter_; }

  bool is_centred(double tol = 1e-12) const {
    double max_norm = 0.0;
    for (Eigen::Index i = 0; i < verts_.cols(); ++i) {
      max_norm = std::max(max_norm, verts_.col(i).norm());
    }
    return verts_.rowwise().sum().norm() <= tol * max_norm;
  }

  Eigen::VectorXd to_barycentric(const Eigen::VectorXd& x) const {
    if (x.size() != verts_.rows()) {
      throw InvalidArgument("to_barycentric: point dimension mismatch");
    }
    const auto d = verts_.rows();
    Eigen::VectorXd mu = lu_.solve(x - verts_.col(d));
    Eigen::VectorXd lambda(d + 1);
    lambda.head(d) = mu;
    lambda(d) = 1.0 - mu.sum();
    return lambda;
  }

  Eigen::VectorXd from_barycentric(const Eigen::VectorXd& lambda) const {
    if (lambda.size() != verts_.cols()) {
      throw InvalidArgument("from_barycentric: coordinate count mismatch");
    }
    return verts_ * lambda;
  }

 private:
  Eigen::MatrixXd verts_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double diameter_ = 0.0;
};

/// Componentwise lambda_i >= -tol.
inline bool is_inside_simplex(const Eigen::VectorXd& lambda,
                              double tol = 1e-12) {
  return (lambda.array() >= -tol).all();
}

namespace detail {
inline void require_inside(const Eigen::VectorXd& lambda, const char* who) {
  if (!is_inside_simplex(lambda)) {
    std::ostringstream msg;
    msg << who << ": barycentric coordinates must be >= 0";
    throw InvalidArgument(msg.str());
  }
}
}  // namespace detail

/// Lift lambda to the nonnegative orthant of the unit sphere in R^{d+1}:
/// x~ = (sqrt(lambda_1), ..., sqrt(lambda_{d+1})).
inline Eigen::VectorXd sphere_lift(const Eigen::VectorXd& lambda) {
  detail::require_inside(lambda, "sphere_lift");
  Eigen::VectorXd lifted = lambda.array().max(0.0).sqrt();
  const double norm = lifted.norm();
  if (norm > 0.0) lifted /= norm;
  return lifted;
}

/// dist(a, b) = arccos(sum_i sqrt(a_i b_i)), the great-circle distance of the
/// sphere lifts; values in [0, pi/2].
inline double baran_distance(const Eigen::VectorXd& a,
                             const Eigen::VectorXd& b) {
  detail::require_inside(a, "baran_distance");
  detail::require_inside(b, "baran_distance");
  if (a.size() != b.size()) {
    throw InvalidArgument("baran_distance: size mismatch");
  }
  const double dot =
      (a.array().max(0.0) * b.array().max(0.0)).sqrt().sum();
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

}  // namespace waldron
