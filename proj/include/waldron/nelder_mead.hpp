#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "waldron/errors.hpp"

namespace waldron {

struct NelderMeadOptions {
  int max_iterations = 4000;
  double f_tol = 1e-13;  // relative spread of simplex values
  double x_tol = 1e-11;  // simplex diameter
  double initial_step = 0.08;
  /// Number of re-initializations around the incumbent with a shrunken step;
  /// guards against premature collapse of the simplex.
  int restarts = 2;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free minimization (reflection/expansion/contraction/shrink with
/// the standard 1, 2, 1/2, 1/2 coefficients).  The objective may return
/// +infinity to mark infeasible points.  Fully deterministic.
inline NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd x0,
    NelderMeadOptions opts = {}) {
  const int dim = static_cast<int>(x0.size());
  if (dim < 1) throw InvalidArgument("nelder_mead: empty start point");

  NelderMeadResult result;
  result.x = x0;
  result.value = f(x0);

  double step = opts.initial_step;
  for (int round = 0; round <= opts.restarts; ++round) {
    std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(dim) + 1);
    std::vector<double> vals(static_cast<std::size_t>(dim) + 1);
    pts[0] = result.x;
    vals[0] = result.value;
    for (int i = 0; i < dim; ++i) {
      Eigen::VectorXd p = result.x;
      p(i) += step;
      pts[static_cast<std::size_t>(i) + 1] = p;
      vals[static_cast<std::size_t>(i) + 1] = f(p);
    }

    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    auto sort_order = [&] {
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return vals[static_cast<std::size_t>(a)] < vals[static_cast<std::size_t>(b)]; });
    };

    for (; result.iterations < opts.max_iterations; ++result.iterations) {
      sort_order();
      const int best = order.front(), worst = order.back();
      const int second_worst = order[order.size() - 2];

      double diameter = 0.0;
      for (std::size_t i = 1; i < pts.size(); ++i) {
        diameter = std::max(
            diameter, (pts[static_cast<std::size_t>(order[i])] - pts[static_cast<std::size_t>(best)])
                          .lpNorm<Eigen::Infinity>());
      }
      const double spread = vals[static_cast<std::size_t>(worst)] - vals[static_cast<std::size_t>(best)];
      if (std::isfinite(vals[static_cast<std::size_t>(worst)]) &&
          spread <= opts.f_tol * (1.0 + std::abs(vals[static_cast<std::size_t>(best)])) &&
          diameter <= opts.x_tol) {
        break;
      }

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        centroid += pts[static_cast<std::size_t>(order[i])];
      }
      centroid /= dim;

      const Eigen::VectorXd reflected = centroid + (centroid - pts[static_cast<std::size_t>(worst)]);
      const double f_reflected = f(reflected);

      if (f_reflected < vals[static_cast<std::size_t>(best)]) {
        const Eigen::VectorXd expanded =
            centroid + 2.0 * (centroid - pts[static_cast<std::size_t>(worst)]);
        const double f_expanded = f(expanded);
        if (f_expanded < f_reflected) {
          pts[static_cast<std::size_t>(worst)] = expanded;
          vals[static_cast<std::size_t>(worst)] = f_expanded;
        } else {
          pts[static_cast<std::size_t>(worst)] = reflected;
          vals[static_cast<std::size_t>(worst)] = f_reflected;
        }
      } else if (f_reflected < vals[static_cast<std::size_t>(second_worst)]) {
        pts[static_cast<std::size_t>(worst)] = reflected;
        vals[static_cast<std::size_t>(worst)] = f_reflected;
      } else {
        const bool outside = f_reflected < vals[static_cast<std::size_t>(worst)];
        const Eigen::VectorXd contracted =
            outside ? (centroid + 0.5 * (reflected - centroid)).eval()
                    : (centroid + 0.5 * (pts[static_cast<std::size_t>(worst)] - centroid)).eval();
        const double f_contracted = f(contracted);
        if (f_contracted < std::min(f_reflected, vals[static_cast<std::size_t>(worst)])) {
          pts[static_cast<std::size_t>(worst)] = contracted;
          vals[static_cast<std::size_t>(worst)] = f_contracted;
        } else {
          for (std::size_t i = 1; i < order.size(); ++i) {
            const std::size_t k = static_cast<std::size_t>(order[i]);
            pts[k] = pts[static_cast<std::size_t>(best)] + 0.5 * (pts[k] - pts[static_cast<std::size_t>(best)]);
            vals[k] = f(pts[k]);
          }
        }
      }
    }

    sort_order();
    const std::size_t best = static_cast<std::size_t>(order.front());
    if (vals[best] < result.value) {
      result.x = pts[best];
      result.value = vals[best];
    }
    result.converged = result.iterations < opts.max_iterations;
    step *= 0.1;
  }
  return result;
}

}  // namespace waldron
