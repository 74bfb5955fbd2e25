#pragma once

#include <Eigen/Dense>
#include <vector>

#include "waldron/errors.hpp"
#include "waldron/multi_index.hpp"

namespace waldron {

/// Fill out[0..mmax] with P_m^{(a,0)}(x), the Jacobi polynomials with
/// second parameter 0, via the standard three-term recurrence.
inline void jacobi_all(int mmax, double a, double x, double* out) {
  out[0] = 1.0;
  if (mmax < 1) return;
  out[1] = 0.5 * ((a + 2.0) * x + a);
  for (int m = 2; m <= mmax; ++m) {
    const double c1 = 2.0 * m * (m + a) * (2.0 * m + a - 2.0);
    const double c2 = (2.0 * m + a - 1.0) * a * a;
    const double c3 = (2.0 * m + a - 2.0) * (2.0 * m + a - 1.0) * (2.0 * m + a);
    const double c4 = 2.0 * (m + a - 1.0) * (m - 1.0) * (2.0 * m + a);
    out[m] = ((c2 + c3 * x) * out[m - 1] - c4 * out[m - 2]) / c1;
  }
}

inline double jacobi(int m, double a, double x) {
  std::vector<double> buf(static_cast<std::size_t>(m) + 1);
  jacobi_all(m, a, x, buf.data());
  return buf[static_cast<std::size_t>(m)];
}

/// Total-degree orthogonal polynomial basis on the simplex (d = 1, 2, 3) in
/// barycentric coordinates, built from warped tensor products of Jacobi
/// polynomials.  Orthogonality keeps collocation matrices well conditioned,
/// which the general cardinal solver and the node-quality objective rely on.
///
/// The evaluation order of the C(n+d, d) basis functions is fixed (graded by
/// construction loops below) and deterministic.
class SimplexBasis {
 public:
  SimplexBasis(int degree, int dim) : degree_(degree), dim_(dim) {
    if (degree < 0) throw InvalidArgument("SimplexBasis: degree must be >= 0");
    if (dim < 1 || dim > 3) {
      throw InvalidArgument("SimplexBasis: dim must be 1, 2, or 3");
    }
    size_ = static_cast<int>(simplex_lattice_size(degree, dim));
    scratch_cols_ = static_cast<std::size_t>(degree_ + 1);
  }

  int size() const { return size_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }

  /// Evaluate all basis functions at barycentric lambda into out[0..size()).
  void eval(const Eigen::VectorXd& lambda, double* out) const {
    if (lambda.size() != dim_ + 1) {
      throw InvalidArgument("SimplexBasis::eval: coordinate count mismatch");
    }
    switch (dim_) {
      case 1: eval1(lambda, out); break;
      case 2: eval2(lambda, out); break;
      default: eval3(lambda, out); break;
    }
  }

  Eigen::VectorXd eval(const Eigen::VectorXd& lambda) const {
    Eigen::VectorXd out(size_);
    eval(lambda, out.data());
    return out;
  }

 private:
  void eval1(const Eigen::VectorXd& lambda, double* out) const {
    jacobi_all(degree_, 0.0, lambda(1) - lambda(0), out);
  }

  void eval2(const Eigen::VectorXd& lambda, double* out) const {
    const int n = degree_;
    const double s = lambda(0) + lambda(1);
    const double a = s > 0.0 ? (lambda(1) - lambda(0)) / s : 0.0;
    const double b = 2.0 * lambda(2) - 1.0;
    thread_local std::vector<double> pa, pb;
    pa.resize(scratch_cols_);
    pb.resize(scratch_cols_);
    jacobi_all(n, 0.0, a, pa.data());
    double spow = 1.0;
    int idx = 0;
    for (int i = 0; i <= n; ++i) {
      jacobi_all(n - i, 2.0 * i + 1.0, b, pb.data());
      const double head = pa[static_cast<std::size_t>(i)] * spow;
      for (int j = 0; j <= n - i; ++j) {
        out[idx++] = head * pb[static_cast<std::size_t>(j)];
      }
      spow *= s;
    }
  }

  void eval3(const Eigen::VectorXd& lambda, double* out) const {
    const int n = degree_;
    const double s12 = lambda(0) + lambda(1);
    const double s123 = s12 + lambda(2);
    const double a2 = s12 > 0.0 ? (lambda(1) - lambda(0)) / s12 : 0.0;
    const double a3 = s123 > 0.0 ? (2.0 * lambda(2) - s123) / s123 : 0.0;
    const double a4 = 2.0 * lambda(3) - 1.0;
    thread_local std::vector<double> pa, pb, pc;
    pa.resize(scratch_cols_);
    pb.resize(scratch_cols_);
    pc.resize(scratch_cols_);
    jacobi_all(n, 0.0, a2, pa.data());
    double s12pow = 1.0;
    int idx = 0;
    for (int i = 0; i <= n; ++i) {
      jacobi_all(n - i, 2.0 * i + 1.0, a3, pb.data());
      double s123pow = 1.0;
      for (int j = 0; j <= n - i; ++j) {
        jacobi_all(n - i - j, 2.0 * (i + j) + 2.0, a4, pc.data());
        const double head =
            pa[static_cast<std::size_t>(i)] * s12pow *
            pb[static_cast<std::size_t>(j)] * s123pow;
        for (int k = 0; k <= n - i - j; ++k) {
          out[idx++] = head * pc[static_cast<std::size_t>(k)];
        }
        s123pow *= s123;
      }
      s12pow *= s12;
    }
  }

  int degree_;
  int dim_;
  int size_;
  std::size_t scratch_cols_;
};

}  // namespace waldron
