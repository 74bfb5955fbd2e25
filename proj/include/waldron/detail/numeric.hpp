#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "waldron/errors.hpp"

namespace waldron::detail {

// ---------------------------------------------------------------------------
// Adaptive Simpson quadrature with the classical Richardson error estimate.
// ---------------------------------------------------------------------------

template <class F>
double simpson_step(F&& f, double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson_rec(F&& f, double a, double fa, double b, double fb,
                            double m, double fm, double whole, double tol,
                            int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_step(f, a, fa, m, fm, flm);
  const double right = simpson_step(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                              depth - 1) +
         adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                              depth - 1);
}

/// Integrate f over [a,b] to absolute tolerance tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol,
                        int max_depth = 48) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson_step(f, a, fa, b, fb, fm);
  return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

// ---------------------------------------------------------------------------
// Bisection for monotone scalar equations.
// ---------------------------------------------------------------------------

/// Find x in [lo,hi] with f(x) = 0 for continuous f with f(lo) <= 0 <= f(hi)
/// (or the reverse sign pattern).  Runs until the bracket width drops below
/// width_tol, then returns the midpoint.
template <class F>
double bisect(F&& f, double lo, double hi, double width_tol = 1e-15,
              int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw InvalidArgument("bisect: root not bracketed");
  }
  for (int it = 0; it < max_iter && hi - lo > width_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (fhi > 0.0)) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Monotone piecewise-cubic Hermite interpolation (Fritsch--Carlson slopes).
// Used to cache cumulative integrals of nonnegative densities; monotonicity
// of the data is preserved exactly, so cached weight functions stay
// increasing and invertible.
// ---------------------------------------------------------------------------

class PchipSpline {
 public:
  PchipSpline() = default;

  PchipSpline(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
      throw InvalidArgument("PchipSpline: need >= 2 matching samples");
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = x_[i + 1] - x_[i];
      if (h[i] <= 0.0) throw InvalidArgument("PchipSpline: x not increasing");
      delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    d_.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) {
        d_[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
      }
    }
    d_[0] = endpoint_slope(h[0], n > 2 ? h[1] : h[0], delta[0],
                           n > 2 ? delta[1] : delta[0]);
    d_[n - 1] = endpoint_slope(h[n - 2], n > 2 ? h[n - 3] : h[n - 2],
                               delta[n - 2], n > 2 ? delta[n - 3] : delta[n - 2]);
  }

  double operator()(double x) const {
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
  }

  double derivative(double x) const {
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double dh00 = (6.0 * t2 - 6.0 * t) / h;
    const double dh10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double dh01 = (-6.0 * t2 + 6.0 * t) / h;
    const double dh11 = 3.0 * t2 - 2.0 * t;
    return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
  }

  double front_x() const { return x_.front(); }
  double back_x() const { return x_.back(); }

 private:
  static double endpoint_slope(double h0, double h1, double d0, double d1) {
    // Three-point one-sided estimate, clipped so monotonicity survives.
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (d * d0 <= 0.0) return 0.0;
    if (d0 * d1 <= 0.0 && std::abs(d) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return d;
  }

  std::size_t interval(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::ptrdiff_t i = std::distance(x_.begin(), it) - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0,
                                   static_cast<std::ptrdiff_t>(x_.size()) - 2);
    return static_cast<std::size_t>(i);
  }

  std::vector<double> x_, y_, d_;
};

}  // namespace waldron::detail
