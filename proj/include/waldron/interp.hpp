#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "waldron/baryweights.hpp"
#include "waldron/basis.hpp"
#include "waldron/errors.hpp"
#include "waldron/multi_index.hpp"
#include "waldron/points.hpp"

namespace waldron {

enum class Scheme {
  SimplexExplicit,
  WaldronExplicit,
  WaldronRational,
  GeneralPolynomial,
};

inline const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::SimplexExplicit: return "simplex-explicit";
    case Scheme::WaldronExplicit: return "waldron-explicit";
    case Scheme::WaldronRational: return "waldron-rational";
    case Scheme::GeneralPolynomial: return "general";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Explicit Lagrange polynomials for the equispaced barycentric lattice:
//   l_alpha(lambda) = C_alpha prod_i prod_{j<alpha_i} (lambda_i - j/n),
//   1/C_alpha = n^{-n} prod_i alpha_i!.
// Evaluated as prod_i prod_{j<alpha_i} (n lambda_i - j) / alpha_i!.
// ---------------------------------------------------------------------------

inline double simplex_cardinal(int n, const MultiIndex& alpha,
                               const Eigen::VectorXd& lambda) {
  if (static_cast<Eigen::Index>(alpha.size()) != lambda.size()) {
    throw InvalidArgument("simplex_cardinal: size mismatch");
  }
  if (n == 0) return 1.0;
  double value = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double scaled = n * lambda(static_cast<Eigen::Index>(i));
    for (int j = 0; j < alpha[i]; ++j) {
      value *= (scaled - j) / (alpha[i] - j);
    }
  }
  return value;
}

/// Shared per-point work for evaluating all lattice cardinals at once.
class SimplexCardinals {
 public:
  SimplexCardinals(int degree, int dim) : n_(degree), d_(dim) {
    inv_factorials_.reserve(
        static_cast<std::size_t>(simplex_lattice_size(degree, dim)));
    for_each_multi_index(degree, dim, [&](const MultiIndex& a) {
      double f = 1.0;
      for (int ai : a) {
        for (int j = 2; j <= ai; ++j) f *= j;
      }
      inv_factorials_.push_back(1.0 / f);
      indices_.push_back(a);
    });
  }

  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  /// out[k] = l_{alpha_k}(lambda) for the enumeration order of the lattice.
  void eval(const Eigen::VectorXd& lambda, double* out) const {
    if (n_ == 0) {
      out[0] = 1.0;
      return;
    }
    // prefix(i, k) = prod_{j<k} (n lambda_i - j); thread-local scratch keeps
    // concurrent evaluation safe.
    thread_local std::vector<double> prefix;
    prefix.resize(static_cast<std::size_t>(d_ + 1) *
                  static_cast<std::size_t>(n_ + 1));
    for (int i = 0; i <= d_; ++i) {
      double p = 1.0;
      const double scaled = n_ * lambda(i);
      double* row = prefix.data() + static_cast<std::size_t>(i) * (n_ + 1);
      for (int k = 0; k <= n_; ++k) {
        row[k] = p;
        p *= scaled - k;
      }
    }
    for (std::size_t idx = 0; idx < indices_.size(); ++idx) {
      const MultiIndex& a = indices_[idx];
      double v = inv_factorials_[idx];
      for (int i = 0; i <= d_; ++i) {
        v *= prefix[static_cast<std::size_t>(i) * (n_ + 1) +
                    static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
      }
      out[idx] = v;
    }
  }

 private:
  int n_, d_;
  std::vector<MultiIndex> indices_;
  std::vector<double> inv_factorials_;
};

// ---------------------------------------------------------------------------
// Explicit cardinal functions at Waldron points (2D, centred simplex,
// complementary weight -- the regime where the baryweight chart is total):
//   l_alpha(x) = C_alpha prod_i prod_{j<alpha_i} (w(theta_i) - w(j/n)),
//   1/C_alpha  =         prod_i prod_{j<alpha_i} (w(alpha_i/n) - w(j/n)),
// with theta the baryweights of x.  Since w(theta_i) = lambda_i + c, one
// chart inversion per evaluation point serves all N cardinals.
// ---------------------------------------------------------------------------

class WaldronCardinals {
 public:
  WaldronCardinals(const Simplex& simplex, const Weight& weight, int degree)
      : chart_(simplex, weight), n_(degree) {
    if (simplex.dim() != 2) {
      throw InvalidArgument("WaldronCardinals: simplex must be 2D");
    }
    if (!simplex.is_centred()) {
      throw InvalidArgument("WaldronCardinals: simplex must be centred");
    }
    if (!is_complementary(weight, 257, 1e-9)) {
      throw InvalidArgument(
          "WaldronCardinals: weight must satisfy w(x)+w(1-x)=1");
    }
    if (degree < 1) throw InvalidArgument("WaldronCardinals: degree >= 1");
    levels_.resize(static_cast<std::size_t>(n_) + 1);
    for (int j = 0; j <= n_; ++j) {
      levels_[static_cast<std::size_t>(j)] = weight(static_cast<double>(j) / n_);
    }
    for_each_multi_index(n_, 2, [&](const MultiIndex& a) {
      double c_inv = 1.0;
      for (int i = 0; i < 3; ++i) {
        const double top = levels_[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
        for (int j = 0; j < a[static_cast<std::size_t>(i)]; ++j) {
          c_inv *= top - levels_[static_cast<std::size_t>(j)];
        }
      }
      indices_.push_back(a);
      inv_constants_.push_back(c_inv);
    });
  }

  int size() const { return static_cast<int>(indices_.size()); }
  int degree() const { return n_; }
  const BaryweightChart& chart() const { return chart_; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  /// All explicit cardinals at barycentric lambda (one inversion).
  void eval(const Eigen::VectorXd& lambda, double* out) const {
    const double c = chart_.solve_offset(lambda);
    // w(theta_i) = lambda_i + c.
    eval_from_levels(lambda.array() + c, out);
  }

  Eigen::VectorXd eval(const Eigen::VectorXd& lambda) const {
    Eigen::VectorXd out(size());
    eval(lambda, out.data());
    return out;
  }

  /// Normalized (rational) cardinals: l_alpha / sum_beta l_beta.
  void eval_rational(const Eigen::VectorXd& lambda, double* out) const {
    eval(lambda, out);
    double denom = 0.0;
    for (int k = 0; k < size(); ++k) denom += out[k];
    if (std::abs(denom) < 1e-12) {
      std::ostringstream msg;
      msg << "rational cardinals: denominator " << denom
          << " vanishes near lambda = (" << lambda.transpose() << ")";
      throw PoleError(msg.str());
    }
    for (int k = 0; k < size(); ++k) out[k] /= denom;
  }

  Eigen::VectorXd eval_rational(const Eigen::VectorXd& lambda) const {
    Eigen::VectorXd out(size());
    eval_rational(lambda, out.data());
    return out;
  }

 private:
  void eval_from_levels(const Eigen::ArrayXd& u, double* out) const {
    // prefix products prod_{j<k} (u_i - w(j/n)); thread-local scratch.
    thread_local std::vector<double> prefix;
    prefix.resize(3 * (static_cast<std::size_t>(n_) + 1));
    for (int i = 0; i < 3; ++i) {
      double p = 1.0;
      for (int k = 0; k <= n_; ++k) {
        prefix[static_cast<std::size_t>(i) * (n_ + 1) + static_cast<std::size_t>(k)] = p;
        p *= u(i) - levels_[static_cast<std::size_t>(k)];
      }
    }
    for (std::size_t idx = 0; idx < indices_.size(); ++idx) {
      const MultiIndex& a = indices_[idx];
      double v = 1.0 / inv_constants_[idx];
      for (int i = 0; i < 3; ++i) {
        v *= prefix[static_cast<std::size_t>(i) * (n_ + 1) +
                    static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
      }
      out[idx] = v;
    }
  }

  BaryweightChart chart_;
  int n_;
  std::vector<double> levels_;
  std::vector<MultiIndex> indices_;
  std::vector<double> inv_constants_;
};

// ---------------------------------------------------------------------------
// Cardinals for arbitrary unisolvent node sets via an orthogonal basis and a
// QR factorization of the collocation matrix M (rows = nodes):
//   l(x) = M^{-T} b(x) = Q R^{-T} b(x).
// The delta property at nodes reduces to Q Q^T = I, so residuals stay near
// machine precision even at degree 16.
// ---------------------------------------------------------------------------

class GeneralCardinals {
 public:
  explicit GeneralCardinals(const NodeFamily& family)
      : basis_(family.degree, family.simplex.dim()) {
    const int N = basis_.size();
    if (static_cast<int>(family.size()) != N) {
      std::ostringstream msg;
      msg << "GeneralCardinals: " << family.size() << " nodes cannot be "
          << "unisolvent for degree " << family.degree << " (need " << N << ")";
      throw InvalidArgument(msg.str());
    }
    Eigen::MatrixXd m(N, N);
    Eigen::VectorXd row(N);
    for (int p = 0; p < N; ++p) {
      basis_.eval(family.nodes[static_cast<std::size_t>(p)].barycentric, row.data());
      m.row(p) = row;
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    r_ = qr.matrixQR().topRows(N).triangularView<Eigen::Upper>();
    q_ = qr.householderQ() * Eigen::MatrixXd::Identity(N, N);

    double dmin = std::abs(r_(0, 0)), dmax = dmin;
    for (int k = 1; k < N; ++k) {
      const double v = std::abs(r_(k, k));
      dmin = std::min(dmin, v);
      dmax = std::max(dmax, v);
    }
    condition_ = dmin > 0.0 ? dmax / dmin
                            : std::numeric_limits<double>::infinity();
    if (!(condition_ < 1e12)) {
      std::ostringstream msg;
      msg << "GeneralCardinals: nodes are not unisolvent for degree "
          << family.degree << " (collocation condition ~ " << condition_ << ")";
      throw ConditioningError(msg.str(), condition_);
    }
  }

  int size() const { return static_cast<int>(q_.rows()); }
  const SimplexBasis& basis() const { return basis_; }
  /// Ratio of extreme |R_ii|, a cheap condition lower bound.
  double condition_estimate() const { return condition_; }

  Eigen::VectorXd eval(const Eigen::VectorXd& lambda) const {
    Eigen::VectorXd b = basis_.eval(lambda);
    r_.transpose().triangularView<Eigen::Lower>().solveInPlace(b);
    return q_ * b;
  }

  /// Blocked form: columns of `basis_block` are b(x) for many points; result
  /// columns are the cardinal vectors.  In-place triangular solve + GEMM.
  void eval_block(Eigen::MatrixXd& basis_block, Eigen::MatrixXd& out) const {
    r_.transpose().triangularView<Eigen::Lower>().solveInPlace(basis_block);
    out.noalias() = q_ * basis_block;
  }

 private:
  SimplexBasis basis_;
  Eigen::MatrixXd q_, r_;
  double condition_ = 0.0;
};

// ---------------------------------------------------------------------------
// Interpolant facade over the four schemes.
// ---------------------------------------------------------------------------

class Interpolant {
 public:
  Interpolant(Scheme scheme, NodeFamily family, Eigen::VectorXd values)
      : scheme_(scheme), family_(std::move(family)), values_(std::move(values)) {
    if (values_.size() != static_cast<Eigen::Index>(family_.size())) {
      throw InvalidArgument("Interpolant: one value per node required");
    }
    switch (scheme_) {
      case Scheme::SimplexExplicit:
        if (family_.kind != FamilyKind::Simplex) {
          throw InvalidArgument(
              "Interpolant: explicit lattice cardinals need simplex points");
        }
        simplex_cards_ = std::make_shared<SimplexCardinals>(
            family_.degree, family_.simplex.dim());
        break;
      case Scheme::WaldronExplicit:
      case Scheme::WaldronRational:
        if (family_.kind != FamilyKind::Waldron || !family_.weight) {
          throw InvalidArgument(
              "Interpolant: explicit/rational cardinals need Waldron points");
        }
        waldron_cards_ = std::make_shared<WaldronCardinals>(
            family_.simplex, *family_.weight, family_.degree);
        break;
      case Scheme::GeneralPolynomial:
        general_cards_ = std::make_shared<GeneralCardinals>(family_);
        break;
    }
  }

  Scheme scheme() const { return scheme_; }
  const NodeFamily& nodes() const { return family_; }

  /// All cardinals at barycentric lambda.
  Eigen::VectorXd cardinals_lambda(const Eigen::VectorXd& lambda) const {
    switch (scheme_) {
      case Scheme::SimplexExplicit: {
        Eigen::VectorXd out(simplex_cards_->size());
        simplex_cards_->eval(lambda, out.data());
        return out;
      }
      case Scheme::WaldronExplicit:
        return waldron_cards_->eval(lambda);
      case Scheme::WaldronRational:
        return waldron_cards_->eval_rational(lambda);
      case Scheme::GeneralPolynomial:
        return general_cards_->eval(lambda);
    }
    throw Error("unreachable");
  }

  double eval_lambda(const Eigen::VectorXd& lambda) const {
    return values_.dot(cardinals_lambda(lambda));
  }

  double operator()(const Eigen::VectorXd& x) const {
    return eval_lambda(family_.simplex.to_barycentric(x));
  }

 private:
  Scheme scheme_;
  NodeFamily family_;
  Eigen::VectorXd values_;
  std::shared_ptr<SimplexCardinals> simplex_cards_;
  std::shared_ptr<WaldronCardinals> waldron_cards_;
  std::shared_ptr<GeneralCardinals> general_cards_;
};

}  // namespace waldron
