#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "waldron/errors.hpp"
#include "waldron/simplex.hpp"
#include "waldron/weights.hpp"

namespace waldron {

/// Bounds satisfied by the sums of weighted coordinates on the simplex.
struct SumBounds {
  double sum_w;       // sum_j w(theta_j)
  double sum_winv;    // sum_j w^{-1}(theta_j)
  double lower_w;     // (d+1) w(1/(d+1)), the minimum of sum_w (barycentre)
  double upper_winv;  // (d+1) w^{-1}(1/(d+1)), the maximum of sum_winv
};

/// Evaluate and enforce, for theta in T_d:
///   (d+1) w(1/(d+1)) <= sum w(theta_j) <= 1,
///   1 <= sum w^{-1}(theta_j) <= (d+1) w^{-1}(1/(d+1)).
/// Violations indicate a weight that is not allowable.
inline SumBounds sum_bounds_check(const Weight& w, const Eigen::VectorXd& theta,
                                  double tol = 1e-12) {
  const int d = static_cast<int>(theta.size()) - 1;
  if (d < 1) throw InvalidArgument("sum_bounds_check: need >= 2 coordinates");
  if (!is_inside_simplex(theta) || std::abs(theta.sum() - 1.0) > 1e-9) {
    throw WeightDomainError("sum_bounds_check: theta must lie in the simplex");
  }
  SumBounds out{};
  for (int j = 0; j <= d; ++j) {
    const double t = std::clamp(theta(j), 0.0, 1.0);
    out.sum_w += w(t);
    out.sum_winv += w.inverse(t);
  }
  out.lower_w = (d + 1) * w(1.0 / (d + 1));
  out.upper_winv = (d + 1) * w.inverse(1.0 / (d + 1));
  if (out.sum_w < out.lower_w - tol || out.sum_w > 1.0 + tol ||
      out.sum_winv < 1.0 - tol || out.sum_winv > out.upper_winv + tol) {
    std::ostringstream msg;
    msg << "sum_bounds_check: bounds violated (sum_w=" << out.sum_w
        << " in [" << out.lower_w << ",1], sum_winv=" << out.sum_winv
        << " in [1," << out.upper_winv << "]); weight '" << w.name()
        << "' is not allowable";
    throw PropertyViolation(msg.str());
  }
  return out;
}

/// Coordinate chart theta <-> lambda defined by
///   lambda_j = w(theta_j) + (1 - sum_i w(theta_i)) / (d+1).
/// Inversion finds the offset c with sum_j w^{-1}(lambda_j + c) = 1 by
/// bisection (the sum is continuous and strictly increasing in c), then
/// theta_j = w^{-1}(lambda_j + c).  Immutable; concurrent use safe.
class BaryweightChart {
 public:
  BaryweightChart(Simplex simplex, Weight weight, double root_tol = 1e-14)
      : simplex_(std::move(simplex)),
        weight_(std::move(weight)),
        root_tol_(root_tol) {}

  const Simplex& simplex() const { return simplex_; }
  const Weight& weight() const { return weight_; }

  /// theta -> lambda.
  Eigen::VectorXd forward(const Eigen::VectorXd& theta) const {
    const int d = simplex_.dim();
    if (theta.size() != d + 1) {
      throw InvalidArgument("BaryweightChart::forward: size mismatch");
    }
    if (!is_inside_simplex(theta) || std::abs(theta.sum() - 1.0) > 1e-9) {
      throw WeightDomainError("BaryweightChart::forward: theta outside T_d");
    }
    Eigen::VectorXd lambda(d + 1);
    for (int j = 0; j <= d; ++j) lambda(j) = weight_(std::clamp(theta(j), 0.0, 1.0));
    const double defect = (1.0 - lambda.sum()) / (d + 1);
    lambda.array() += defect;
    return lambda;
  }

  /// sum_j w^{-1}(lambda_j + c) for c in the admissible offset interval.
  double inverse_sum(const Eigen::VectorXd& lambda, double c) const {
    double sum = 0.0;
    for (int j = 0; j < lambda.size(); ++j) {
      sum += weight_.inverse(std::clamp(lambda(j) + c, 0.0, 1.0));
    }
    return sum;
  }

  /// The offset c solving sum_j w^{-1}(lambda_j + c) = 1.
  double solve_offset(const Eigen::VectorXd& lambda) const {
    const int d = simplex_.dim();
    if (lambda.size() != d + 1) {
      throw InvalidArgument("BaryweightChart::invert: size mismatch");
    }
    if (!is_inside_simplex(lambda) || std::abs(lambda.sum() - 1.0) > 1e-9) {
      throw InvalidArgument("BaryweightChart::invert: lambda outside simplex");
    }
    double lo = -lambda.minCoeff();
    double hi = 1.0 - lambda.maxCoeff();
    const double at_lo = inverse_sum(lambda, lo);
    // Points on the image boundary (e.g. edges under a complementary weight)
    // evaluate to 1 +- rounding at the smallest offset; only a residual
    // clearly above rounding means the preimage is missing.
    if (at_lo > 1.0 + 1e-12) {
      std::ostringstream msg;
      msg << "point has no baryweight preimage under weight '" << weight_.name()
          << "' (residual " << at_lo - 1.0 << " at the smallest offset)";
      throw NotInImageError(msg.str(), at_lo - 1.0);
    }
    if (at_lo >= 1.0) return lo;
    if (inverse_sum(lambda, hi) <= 1.0) return hi;  // root at the upper end
    // 60 halvings shrink a unit bracket below 1e-18.
    for (int it = 0; it < 80 && hi - lo > root_tol_ * 1e-4; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (inverse_sum(lambda, mid) < 1.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  /// lambda -> theta.
  Eigen::VectorXd invert(const Eigen::VectorXd& lambda) const {
    const double c = solve_offset(lambda);
    Eigen::VectorXd theta(lambda.size());
    for (int j = 0; j < lambda.size(); ++j) {
      theta(j) = weight_.inverse(std::clamp(lambda(j) + c, 0.0, 1.0));
    }
    return theta;
  }

 private:
  Simplex simplex_;
  Weight weight_;
  double root_tol_;
};

}  // namespace waldron
