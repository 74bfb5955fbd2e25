#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "waldron/detail/numeric.hpp"
#include "waldron/errors.hpp"

namespace waldron {

enum class WeightKind { Identity, Cosine, QuadraticPiecewise, FromDensity, Convex };

/// Options for weights built from a density F on [0,1/2].
struct DensityOptions {
  /// Rescale F so that its integral over [0,1/2] is exactly 1/2.  When false,
  /// a density whose integral misses 1/2 by more than 1e-8 is rejected.
  bool normalize = false;
  double quadrature_tol = 1e-12;
  /// Number of Chebyshev-spaced abscissae for the cached antiderivative.
  int cache_size = 4097;
};

namespace detail {

class WeightImpl {
 public:
  WeightImpl(WeightKind kind, std::string name)
      : kind_(kind), name_(std::move(name)) {}
  virtual ~WeightImpl() = default;

  virtual double eval(double x) const = 0;
  virtual double derivative(double x) const = 0;
  /// Generic inverse: bisection.  Safe because every weight is monotone and
  /// the derivative may vanish at the endpoints (Newton would stall there).
  virtual double inverse(double y) const {
    return bisect([&](double t) { return eval(t) - y; }, 0.0, 1.0, 1e-15);
  }

  WeightKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  WeightKind kind_;
  std::string name_;
};

class IdentityWeight final : public WeightImpl {
 public:
  IdentityWeight() : WeightImpl(WeightKind::Identity, "identity") {}
  double eval(double x) const override { return x; }
  double derivative(double) const override { return 1.0; }
  double inverse(double y) const override { return y; }
};

class CosineWeight final : public WeightImpl {
 public:
  CosineWeight() : WeightImpl(WeightKind::Cosine, "cosine") {}
  double eval(double x) const override {
    return 0.5 * (1.0 - std::cos(std::numbers::pi * x));
  }
  double derivative(double x) const override {
    return 0.5 * std::numbers::pi * std::sin(std::numbers::pi * x);
  }
  double inverse(double y) const override {
    const double c = std::clamp(1.0 - 2.0 * y, -1.0, 1.0);
    return std::acos(c) / std::numbers::pi;
  }
};

class QuadraticPiecewiseWeight final : public WeightImpl {
 public:
  QuadraticPiecewiseWeight() : WeightImpl(WeightKind::QuadraticPiecewise, "quad") {}
  double eval(double x) const override {
    return x <= 0.5 ? 2.0 * x * x : 1.0 - 2.0 * (1.0 - x) * (1.0 - x);
  }
  // At the kink x=1/2 the underlying density is continuous (F(1/2)=2), so
  // left and right limits agree and we return 2 there.
  double derivative(double x) const override {
    return x <= 0.5 ? 4.0 * x : 4.0 * (1.0 - x);
  }
  double inverse(double y) const override {
    return y <= 0.5 ? std::sqrt(0.5 * y) : 1.0 - std::sqrt(0.5 * (1.0 - y));
  }
};

class ConvexWeight;      // defined after Weight
class FromDensityWeight; // defined after Weight

}  // namespace detail

/// An allowable weight function w : [0,1] -> [0,1], increasing with w(0)=0,
/// w(1)=1.  Instances are immutable and cheap to copy (shared impl), and all
/// evaluation paths are pure, so concurrent use is safe.
class Weight {
 public:
  double operator()(double x) const { return impl_->eval(domain_check(x, "eval")); }
  double eval(double x) const { return (*this)(x); }

  /// x with |w(x) - y| <= eval_tol.  Closed form where available.
  double inverse(double y) const {
    return impl_->inverse(domain_check(y, "inverse"));
  }

  double derivative(double x) const {
    return impl_->derivative(domain_check(x, "derivative"));
  }

  WeightKind kind() const { return impl_->kind(); }
  const std::string& name() const { return impl_->name(); }
  double eval_tol() const { return eval_tol_; }

  static Weight identity() {
    return Weight(std::make_shared<detail::IdentityWeight>());
  }
  static Weight cosine() {
    return Weight(std::make_shared<detail::CosineWeight>());
  }
  static Weight quadratic_piecewise() {
    return Weight(std::make_shared<detail::QuadraticPiecewiseWeight>());
  }
  /// (1-t)*w0 + t*w1; t=0 gives w0, t=1 gives w1.
  static Weight convex(double t, const Weight& w0, const Weight& w1);
  /// Build w(x) = \int_0^x F~ from a density F on [0,1/2]; F~ is the
  /// symmetric extension F~(t) = F(1-t) on (1/2,1].
  static Weight from_density(std::function<double(double)> density,
                             DensityOptions opts = {},
                             std::string label = "density:custom");
  /// Same, with F given as linearly interpolated (t, F(t)) samples on
  /// [0,1/2].  Samples must be strictly increasing in t with F >= 0 and
  /// non-decreasing; F is extended as a constant outside the sampled range.
  static Weight from_density_samples(
      std::span<const std::pair<double, double>> samples,
      DensityOptions opts = {}, std::string label = "density:samples");

 private:
  explicit Weight(std::shared_ptr<const detail::WeightImpl> impl,
                  double eval_tol = 1e-14)
      : impl_(std::move(impl)), eval_tol_(eval_tol) {}

  double domain_check(double x, const char* op) const {
    if (!(x >= -eval_tol_ && x <= 1.0 + eval_tol_)) {
      std::ostringstream msg;
      msg << "weight " << op << ": argument " << x << " outside [0,1]";
      throw WeightDomainError(msg.str());
    }
    return std::clamp(x, 0.0, 1.0);
  }

  std::shared_ptr<const detail::WeightImpl> impl_;
  double eval_tol_;
};

namespace detail {

class ConvexWeight final : public WeightImpl {
 public:
  ConvexWeight(double t, Weight w0, Weight w1, std::string name)
      : WeightImpl(WeightKind::Convex, std::move(name)),
        t_(t),
        w0_(std::move(w0)),
        w1_(std::move(w1)) {}
  double eval(double x) const override {
    return (1.0 - t_) * w0_(x) + t_ * w1_(x);
  }
  double derivative(double x) const override {
    return (1.0 - t_) * w0_.derivative(x) + t_ * w1_.derivative(x);
  }

 private:
  double t_;
  Weight w0_, w1_;
};

class FromDensityWeight final : public WeightImpl {
 public:
  FromDensityWeight(std::function<double(double)> density, DensityOptions opts,
                    std::string name)
      : WeightImpl(WeightKind::FromDensity, std::move(name)),
        density_(std::move(density)) {
    if (opts.cache_size < 9) {
      throw InvalidArgument("from_density: cache_size too small");
    }
    double scale = 1.0;
    const double integral =
        adaptive_simpson([&](double t) { return density_(t); }, 0.0, 0.5,
                         opts.quadrature_tol);
    if (std::abs(integral - 0.5) > 1e-8) {
      if (!opts.normalize) {
        std::ostringstream msg;
        msg << "from_density: integral of F over [0,1/2] is " << integral
            << ", expected 1/2 (pass normalize=true to rescale)";
        throw PropertyViolation(msg.str());
      }
      if (integral <= 0.0) {
        throw PropertyViolation("from_density: density integrates to <= 0");
      }
      scale = 0.5 / integral;
    }

    // Antiderivative cached on Chebyshev-spaced abscissae; PCHIP keeps the
    // cached w monotone, which the bisection inverse relies on.
    const int m = opts.cache_size - 1;
    std::vector<double> xs(opts.cache_size), ys(opts.cache_size);
    for (int k = 0; k <= m; ++k) {
      xs[k] = 0.5 * (1.0 - std::cos(std::numbers::pi * k / m));
    }
    xs.front() = 0.0;
    xs.back() = 1.0;
    ys[0] = 0.0;
    const double piece_tol = opts.quadrature_tol / m;
    for (int k = 1; k <= m; ++k) {
      ys[k] = ys[k - 1] + adaptive_simpson([&](double t) { return extended(t); },
                                           xs[k - 1], xs[k], piece_tol);
    }
    const double total = ys.back();
    if (!(total > 0.0)) {
      throw PropertyViolation("from_density: antiderivative does not reach 1");
    }
    // Pin w(1)=1 exactly; for an admissible density this moves values by at
    // most the quadrature tolerance.
    deriv_scale_ = scale / total;
    for (double& y : ys) y /= total;
    spline_ = PchipSpline(std::move(xs), std::move(ys));
  }

  double eval(double x) const override {
    return std::clamp(spline_(x), 0.0, 1.0);
  }
  /// The derivative of w is the (scaled) extended density itself.
  double derivative(double x) const override {
    return extended(x) * deriv_scale_;
  }

 private:
  double extended(double t) const {
    return t <= 0.5 ? density_(t) : density_(1.0 - t);
  }

  std::function<double(double)> density_;
  PchipSpline spline_;
  double deriv_scale_ = 1.0;
};

}  // namespace detail

inline Weight Weight::convex(double t, const Weight& w0, const Weight& w1) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidArgument("convex weight: t must lie in [0,1]");
  }
  std::ostringstream name;
  name << "convex:t=" << t << ":" << w0.name() << ":" << w1.name();
  return Weight(std::make_shared<detail::ConvexWeight>(t, w0, w1, name.str()));
}

inline Weight Weight::from_density(std::function<double(double)> density,
                                   DensityOptions opts, std::string label) {
  return Weight(std::make_shared<detail::FromDensityWeight>(
                    std::move(density), opts, std::move(label)),
                1e-11);
}

inline Weight Weight::from_density_samples(
    std::span<const std::pair<double, double>> samples, DensityOptions opts,
    std::string label) {
  if (samples.size() < 2) {
    throw InvalidArgument("from_density_samples: need at least two samples");
  }
  std::vector<double> t(samples.size()), f(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    t[i] = samples[i].first;
    f[i] = samples[i].second;
    if (!(t[i] >= 0.0 && t[i] <= 0.5 + 1e-12)) {
      throw InvalidArgument("from_density_samples: t outside [0,1/2]");
    }
    if (f[i] < 0.0) {
      throw PropertyViolation("from_density_samples: density must be >= 0");
    }
    if (i > 0 && t[i] <= t[i - 1]) {
      throw InvalidArgument("from_density_samples: t must be increasing");
    }
    if (i > 0 && f[i] < f[i - 1] - 1e-12) {
      throw PropertyViolation(
          "from_density_samples: density must be non-decreasing on [0,1/2]");
    }
  }
  auto interp = [t = std::move(t), f = std::move(f)](double x) {
    if (x <= t.front()) return f.front();
    if (x >= t.back()) return f.back();
    auto it = std::upper_bound(t.begin(), t.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
    const double u = (x - t[i]) / (t[i + 1] - t[i]);
    return (1.0 - u) * f[i] + u * f[i + 1];
  };
  return from_density(std::move(interp), opts, std::move(label));
}

// ---------------------------------------------------------------------------
// Allowability predicates.
// ---------------------------------------------------------------------------

/// Superadditivity on a tuple: sum_j w(theta_j) <= w(sum_j theta_j) + tol.
/// Requires theta_j >= 0 with sum <= 1.
inline bool check_superadditive(const Weight& w, std::span<const double> theta,
                                double tol = 1e-12) {
  double sum = 0.0;
  for (double th : theta) {
    if (th < -w.eval_tol()) {
      throw WeightDomainError("check_superadditive: negative entry");
    }
    sum += th;
  }
  if (sum > 1.0 + w.eval_tol()) {
    throw WeightDomainError("check_superadditive: entries sum past 1");
  }
  double lhs = 0.0;
  for (double th : theta) lhs += w(th);
  return lhs <= w(std::min(sum, 1.0)) + tol;
}

/// The defining allowability condition on a barycentric tuple:
/// sum theta = 1 and sum_j w(theta_j) <= 1 + tol.
inline bool check_weight_sum(const Weight& w, std::span<const double> theta,
                             double tol = 1e-12) {
  double sum = 0.0;
  for (double th : theta) sum += th;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw WeightDomainError("check_weight_sum: entries must sum to 1");
  }
  double lhs = 0.0;
  for (double th : theta) lhs += w(th);
  return lhs <= 1.0 + tol;
}

/// Sampled check of w(x) + w(1-x) = 1 on a uniform grid.
inline bool is_complementary(const Weight& w, int samples = 257,
                             double tol = 1e-12) {
  for (int k = 0; k < samples; ++k) {
    const double x = static_cast<double>(k) / (samples - 1);
    if (std::abs(w(x) + w(1.0 - x) - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace waldron
