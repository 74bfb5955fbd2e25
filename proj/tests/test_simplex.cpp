#include "waldron/simplex.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using waldron::Simplex;

namespace {

Eigen::VectorXd bary3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

Eigen::VectorXd random_barycentric(int d, std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXd lambda(d + 1);
  for (int i = 0; i <= d; ++i) lambda(i) = -std::log(1.0 - unif(rng));
  lambda /= lambda.sum();
  return lambda;
}

TEST(Simplex, NamedSimplices) {
  const Simplex tri = Simplex::equilateral_triangle();
  EXPECT_EQ(tri.dim(), 2);
  EXPECT_TRUE(tri.is_centred());
  // Equilateral: all edges equal.
  const auto& v = tri.vertices();
  const double e01 = (v.col(0) - v.col(1)).norm();
  const double e12 = (v.col(1) - v.col(2)).norm();
  const double e02 = (v.col(0) - v.col(2)).norm();
  EXPECT_NEAR(e01, e12, 1e-14);
  EXPECT_NEAR(e01, e02, 1e-14);

  const Simplex tet = Simplex::centred_tetrahedron();
  EXPECT_EQ(tet.dim(), 3);
  EXPECT_TRUE(tet.is_centred());
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(tet.vertices().col(i).norm(), 1.0, 1e-14);  // unit circumradius
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      EXPECT_NEAR((tet.vertices().col(i) - tet.vertices().col(j)).norm(),
                  std::sqrt(8.0 / 3.0), 1e-14);  // regular
    }
  }

  const Simplex unit3 = Simplex::unit(3);
  EXPECT_EQ(unit3.dim(), 3);
  EXPECT_FALSE(unit3.is_centred());
}

TEST(Simplex, DegenerateRejected) {
  Eigen::MatrixXd v(2, 3);
  v << 0.0, 1.0, 2.0, 0.0, 1.0, 2.0;  // collinear
  EXPECT_THROW(Simplex{v}, waldron::InvalidArgument);
  Eigen::MatrixXd bad_shape(2, 2);
  bad_shape.setIdentity();
  EXPECT_THROW(Simplex{bad_shape}, waldron::InvalidArgument);
}

TEST(Simplex, ToBarycentricAtLandmarks) {
  const Simplex tri = Simplex::equilateral_triangle();
  Eigen::VectorXd x(2);
  x << 0.0, 1.0;  // third vertex
  Eigen::VectorXd lambda = tri.to_barycentric(x);
  EXPECT_NEAR(lambda(0), 0.0, 1e-14);
  EXPECT_NEAR(lambda(1), 0.0, 1e-14);
  EXPECT_NEAR(lambda(2), 1.0, 1e-14);

  x << 0.0, 0.0;  // centroid of a centred simplex
  lambda = tri.to_barycentric(x);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(lambda(i), 1.0 / 3.0, 1e-14);

  const Simplex tet = Simplex::unit(3);
  Eigen::VectorXd y(3);
  y << 0.25, 0.25, 0.25;
  Eigen::VectorXd mu = tet.to_barycentric(y);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(mu(i), 0.25, 1e-14);
}

TEST(Simplex, BarycentricRoundTrip) {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 3;
    Eigen::MatrixXd verts(d, d + 1);
    for (int i = 0; i < verts.size(); ++i) verts(i) = coord(rng);
    const Simplex s{verts};
    for (int k = 0; k < 500; ++k) {
      const Eigen::VectorXd lambda = random_barycentric(d, rng);
      const Eigen::VectorXd x = s.from_barycentric(lambda);
      const Eigen::VectorXd back = s.to_barycentric(x);
      EXPECT_NEAR((back - lambda).lpNorm<Eigen::Infinity>(), 0.0, 1e-10);
      EXPECT_NEAR(back.sum(), 1.0, 1e-12);
      EXPECT_NEAR((s.from_barycentric(back) - x).norm(), 0.0,
                  1e-10 * s.diameter());
    }
  }
}

TEST(SphereLift, Landmarks) {
  Eigen::VectorXd lifted = waldron::sphere_lift(bary3(1.0, 0.0, 0.0));
  EXPECT_NEAR(lifted(0), 1.0, 1e-15);
  EXPECT_NEAR(lifted(1), 0.0, 1e-15);
  EXPECT_NEAR(lifted(2), 0.0, 1e-15);

  lifted = waldron::sphere_lift(bary3(1.0 / 3, 1.0 / 3, 1.0 / 3));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(lifted(i), 1.0 / std::sqrt(3.0), 1e-14);

  lifted = waldron::sphere_lift(bary3(0.5, 0.5, 0.0));
  EXPECT_NEAR(lifted(0), std::sqrt(2.0) / 2.0, 1e-14);
  EXPECT_NEAR(lifted(1), std::sqrt(2.0) / 2.0, 1e-14);
  EXPECT_NEAR(lifted(2), 0.0, 1e-15);
}

TEST(SphereLift, UnitNormOnRandomPoints) {
  std::mt19937 rng(5);
  for (int d : {1, 2, 3}) {
    for (int k = 0; k < 1000; ++k) {
      const Eigen::VectorXd lambda = random_barycentric(d, rng);
      EXPECT_NEAR(waldron::sphere_lift(lambda).norm(), 1.0, 1e-12);
    }
  }
}

TEST(BaranDistance, Landmarks) {
  EXPECT_NEAR(waldron::baran_distance(bary3(1, 0, 0), bary3(0, 1, 0)),
              std::numbers::pi / 2.0, 1e-15);
  EXPECT_NEAR(waldron::baran_distance(bary3(0.2, 0.5, 0.3), bary3(0.2, 0.5, 0.3)),
              0.0, 1e-7);
  EXPECT_NEAR(waldron::baran_distance(bary3(1.0 / 3, 1.0 / 3, 1.0 / 3),
                                      bary3(1, 0, 0)),
              std::acos(1.0 / std::sqrt(3.0)), 1e-14);
  EXPECT_THROW(waldron::baran_distance(bary3(-0.5, 0.75, 0.75), bary3(1, 0, 0)),
               waldron::InvalidArgument);
}

TEST(BaranDistance, EqualsGreatCircleDistanceOfLifts) {
  std::mt19937 rng(123);
  for (int d : {1, 2, 3}) {
    for (int k = 0; k < 2000; ++k) {
      const Eigen::VectorXd a = random_barycentric(d, rng);
      const Eigen::VectorXd b = random_barycentric(d, rng);
      const double direct = waldron::baran_distance(a, b);
      const double dot = waldron::sphere_lift(a).dot(waldron::sphere_lift(b));
      const double great_circle = std::acos(std::clamp(dot, -1.0, 1.0));
      // acos amplifies rounding near coincident points by 1/sin(angle).
      const double tol = 1e-12 + 1e-15 / std::max(std::sin(direct), 1e-15);
      EXPECT_NEAR(direct, great_circle, tol);
      EXPECT_GE(direct, 0.0);
      EXPECT_LE(direct, std::numbers::pi / 2.0 + 1e-15);
    }
  }
}

}  // namespace
