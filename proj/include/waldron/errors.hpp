#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace waldron {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied argument (degenerate simplex, bad degree, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a weight function outside [0,1].
class WeightDomainError : public Error {
 public:
  using Error::Error;
};

/// A required structural property fails (sum bound, monotonicity, ...).
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when a point has no preimage under a baryweight chart.
class NotInImageError : public Error {
 public:
  NotInImageError(const std::string& what, double residual_at_cmin)
      : Error(what), residual_at_cmin(residual_at_cmin) {}
  /// Value of sum_j w^{-1}(lambda_j + c) - 1 at the smallest admissible c.
  double residual_at_cmin;
};

/// Rational cardinal evaluated where the denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Collocation matrix too ill-conditioned for a reliable solve.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double condition)
      : Error(what), condition(condition) {}
  double condition;
};

/// Optimizer failed to converge; carries the best point found.
class OptimizerError : public Error {
 public:
  OptimizerError(const std::string& what, std::vector<double> best_point,
                 double best_value)
      : Error(what), best_point(std::move(best_point)), best_value(best_value) {}
  std::vector<double> best_point;
  double best_value;
};

/// File or stream problem.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual specification (weight spec, simplex spec, range spec).
class SpecParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace waldron
