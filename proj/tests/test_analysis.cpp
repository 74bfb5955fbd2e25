#include "waldron/analysis.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

using waldron::FamilyKind;
using waldron::FamilySpec;
using waldron::LebesgueOptions;
using waldron::LebesgueReport;
using waldron::NodeFamily;
using waldron::Scheme;
using waldron::Simplex;
using waldron::Weight;

TEST(LebesgueConstant, DegreeOneIsExactlyOne) {
  // Degree-1 cardinals are the barycentric coordinates themselves, which are
  // non-negative on the simplex; the maximum of their absolute sum is 1.
  const Simplex s = Simplex::equilateral_triangle();
  const auto report = lebesgue_constant(simplex_points(s, 1),
                                        Scheme::SimplexExplicit, 40);
  EXPECT_NEAR(report.constant, 1.0, 1e-13);
  EXPECT_EQ(report.grid, 40);
  EXPECT_EQ(report.node_count, 3);
}

TEST(LebesgueConstant, LatticeDegreeTwoMatchesReference) {
  const Simplex s = Simplex::equilateral_triangle();
  const auto report = lebesgue_constant(simplex_points(s, 2),
                                        Scheme::SimplexExplicit, 200);
  EXPECT_NEAR(report.constant, 5.0 / 3.0, 0.01);
}

TEST(LebesgueConstant, SymmetryReductionIsExact) {
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily f = waldron_points(s, 3, Weight::cosine());
  LebesgueOptions full;
  full.symmetry_reduce = false;
  LebesgueOptions reduced;
  reduced.symmetry_reduce = true;
  const auto a = lebesgue_constant(f, Scheme::GeneralPolynomial, 90, full);
  const auto b = lebesgue_constant(f, Scheme::GeneralPolynomial, 90, reduced);
  EXPECT_NEAR(a.constant, b.constant, 1e-11);
}

TEST(LebesgueConstant, SchemesAgreeWhereBothApply) {
  // The explicit lattice cardinals and the collocation solve describe the
  // same interpolation operator.
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily f = simplex_points(s, 4);
  const auto exp_report = lebesgue_constant(f, Scheme::SimplexExplicit, 120);
  const auto gen_report = lebesgue_constant(f, Scheme::GeneralPolynomial, 120);
  EXPECT_NEAR(exp_report.constant, gen_report.constant, 1e-8);
}

TEST(LebesgueConstant, Waldron2DMatchesReference) {
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily f = waldron_points(s, 3, Weight::cosine());
  const auto report = lebesgue_constant(f, Scheme::GeneralPolynomial, 300);
  EXPECT_NEAR(report.constant, 2.11, 0.03);
}

TEST(LebesgueConstant, Concentric2DMatchesReference) {
  const auto report = lebesgue_constant(waldron::concentric_points(4),
                                        Scheme::GeneralPolynomial, 300);
  EXPECT_NEAR(report.constant, 2.77, 0.04);
}

TEST(LebesgueConstant, Modified3DMatchesReference) {
  const Simplex tet = Simplex::centred_tetrahedron();
  const NodeFamily f = waldron_points_modified_3d(tet, 2, Weight::cosine());
  const auto report = lebesgue_constant(f, Scheme::GeneralPolynomial, 90);
  EXPECT_NEAR(report.constant, 2.00, 0.05);
  const auto lattice = lebesgue_constant(simplex_points(tet, 2),
                                         Scheme::SimplexExplicit, 90);
  EXPECT_NEAR(lattice.constant, 2.00, 0.05);
}

TEST(LebesgueConstant, ArgmaxIsReported) {
  const Simplex s = Simplex::equilateral_triangle();
  const auto report = lebesgue_constant(simplex_points(s, 3),
                                        Scheme::SimplexExplicit, 120);
  ASSERT_EQ(report.argmax.size(), 3);
  EXPECT_NEAR(report.argmax.sum(), 1.0, 1e-12);
}

TEST(LebesgueConstant, AutoModeRefinesGrid) {
  const Simplex s = Simplex::equilateral_triangle();
  LebesgueOptions opts;
  opts.initial_grid = 30;
  opts.stability_rel = 1e-4;  // force at least one doubling
  const auto report = lebesgue_constant_auto(waldron_points(s, 2, Weight::cosine()),
                                             Scheme::GeneralPolynomial, opts);
  EXPECT_GE(report.grid, 60);
  EXPECT_NEAR(report.constant, 1.67, 0.02);
}

TEST(LebesgueConstant, RationalSchemeRunsWithoutPoles) {
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily f = waldron_points(s, 2, Weight::cosine());
  const auto report = lebesgue_constant(f, Scheme::WaldronRational, 150);
  EXPECT_GT(report.constant, 1.0);
  EXPECT_EQ(report.pole_skips, 0);
}

TEST(LebesgueTable, SideBySideColumnsAndNaNs) {
  const std::vector<FamilySpec> specs = {
      FamilySpec{FamilyKind::Waldron, Weight::cosine(), {}},
      FamilySpec{FamilyKind::Concentric, std::nullopt, {}},
      FamilySpec{FamilyKind::Simplex, std::nullopt, {}},
  };
  const std::vector<int> degrees = {2, 13};
  const auto table = waldron::lebesgue_table(specs, degrees, 2, 80);
  ASSERT_EQ(table.columns.size(), 3u);
  EXPECT_EQ(table.columns[0], "waldron:cosine");
  ASSERT_EQ(table.constants.size(), 2u);
  EXPECT_NEAR(table.constants[0][0], 1.67, 0.05);
  EXPECT_NEAR(table.constants[0][1], 1.67, 0.05);
  EXPECT_NEAR(table.constants[0][2], 1.67, 0.05);
  EXPECT_TRUE(std::isnan(table.constants[1][1]));  // no concentric radii at 13
  EXPECT_FALSE(std::isnan(table.constants[1][0]));
  EXPECT_EQ(table.node_counts[0], 6);
  EXPECT_EQ(table.node_counts[1], 105);
}

TEST(Spacing, ClosedFormMatchesFiniteDifferences) {
  const Weight w = Weight::cosine();
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int k = 0; k < 200; ++k) {
    double a = unif(rng), b = unif(rng) * (1.0 - a);
    const Eigen::Vector3d theta(a, b, 1.0 - a - b);
    const auto sample = waldron::spacing_D(w, theta);
    ASSERT_FALSE(std::isnan(sample.finite_difference_sq));
    EXPECT_NEAR(sample.finite_difference_sq, sample.closed_form_sq,
                1e-6 * sample.closed_form_sq);
  }
}

TEST(Spacing, ExtremaMatchTheory) {
  const auto report = waldron::spacing_extrema(Weight::cosine(), 240);
  const double expected_max = (2.0 * std::sqrt(3.0) + 3.0) / 3.0;
  EXPECT_NEAR(report.max_ratio_sq, expected_max, 1e-3);
  EXPECT_NEAR(report.min_ratio_sq, 1.0, 1e-6);
  // Maximum sits on the symmetry axis theta_1 = theta_2 at the predicted
  // theta_3.
  EXPECT_NEAR(report.argmax_theta(2), report.critical_theta3, 0.02);
  EXPECT_NEAR(report.critical_theta3,
              Weight::cosine().inverse(4.0 - 2.0 * std::sqrt(3.0)), 1e-14);
}

TEST(Spacing, BoundaryPointsHaveNoFiniteDifference) {
  const auto sample = waldron::spacing_D(Weight::cosine(),
                                         Eigen::Vector3d(0.0, 0.4, 0.6));
  EXPECT_TRUE(std::isnan(sample.finite_difference_sq));
  EXPECT_FALSE(std::isnan(sample.closed_form_sq));
}

TEST(Spacing, NeighborDistancesStayInEnvelope) {
  for (int n : {5, 10}) {
    const auto report = waldron::neighbor_spacing(Weight::cosine(), n);
    EXPECT_NEAR(report.neighbor_min_ratio, 1.0, 1e-9) << n;
    EXPECT_GT(report.neighbor_max_ratio, 1.40) << n;
    EXPECT_LT(report.neighbor_max_ratio, 1.47) << n;
  }
}

TEST(Spacing, RejectsPointsOutsideDomain) {
  EXPECT_THROW(waldron::spacing_D(Weight::cosine(), Eigen::Vector3d(0.8, 0.4, -0.2)),
               waldron::WeightDomainError);
}
