#include "waldron/points.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>

using waldron::FamilyKind;
using waldron::MultiIndex;
using waldron::NodeFamily;
using waldron::Simplex;
using waldron::Weight;

namespace {

Eigen::VectorXd bary_of_index(const MultiIndex& alpha, int n) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(alpha.size()));
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    v(j) = static_cast<double>(alpha[static_cast<std::size_t>(j)]) / n;
  }
  return v;
}

}  // namespace

TEST(SimplexPoints, CountAndCoordinates) {
  for (int d : {2, 3}) {
    const Simplex s = d == 2 ? Simplex::equilateral_triangle()
                             : Simplex::centred_tetrahedron();
    for (int n = 1; n <= 6; ++n) {
      const NodeFamily f = simplex_points(s, n);
      EXPECT_EQ(static_cast<std::int64_t>(f.size()),
                waldron::simplex_lattice_size(n, d));
      for (const auto& node : f.nodes) {
        EXPECT_NEAR(node.barycentric.sum(), 1.0, 1e-14);
        EXPECT_TRUE(node.barycentric.isApprox(bary_of_index(node.index, n)));
        EXPECT_TRUE(
            s.to_barycentric(node.cartesian).isApprox(node.barycentric, 1e-10));
      }
    }
  }
}

TEST(SimplexPoints, VerticesArePresent) {
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily f = simplex_points(s, 4);
  for (int j = 0; j < 3; ++j) {
    const Eigen::Vector2d vert = s.vertices().col(j);
    const bool found = std::any_of(f.nodes.begin(), f.nodes.end(), [&](const auto& n) {
      return (n.cartesian - vert).norm() < 1e-12;
    });
    EXPECT_TRUE(found) << "vertex " << j;
  }
}

TEST(SimplexPoints, DegreeZeroIsBarycentre) {
  const Simplex s = Simplex::centred_tetrahedron();
  const NodeFamily f = simplex_points(s, 0);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_NEAR(f.nodes[0].cartesian.norm(), 0.0, 1e-14);
}

TEST(WaldronPoints, IdentityWeightGivesLattice) {
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily lattice = simplex_points(s, 5);
  const NodeFamily pts = waldron_points(s, 5, Weight::identity());
  ASSERT_EQ(pts.size(), lattice.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    EXPECT_TRUE(pts.nodes[k].cartesian.isApprox(lattice.nodes[k].cartesian, 1e-12));
  }
}

TEST(WaldronPoints, BarycentricMatchesDefectFormula) {
  const Weight w = Weight::cosine();
  for (int d : {2, 3}) {
    const Simplex s = d == 2 ? Simplex::equilateral_triangle()
                             : Simplex::centred_tetrahedron();
    const int n = 6;
    const NodeFamily f = waldron_points(s, n, w);
    for (const auto& node : f.nodes) {
      double wsum = 0.0;
      for (int j = 0; j <= d; ++j) {
        const double wj = w(static_cast<double>(node.index[static_cast<std::size_t>(j)]) / n);
        EXPECT_NEAR(node.baryweights(j), wj, 1e-15);
        wsum += wj;
      }
      const double defect = (1.0 - wsum) / (d + 1);
      for (int j = 0; j <= d; ++j) {
        EXPECT_NEAR(node.barycentric(j), node.baryweights(j) + defect, 1e-15);
      }
      EXPECT_NEAR(node.barycentric.sum(), 1.0, 1e-13);
    }
  }
}

TEST(WaldronPoints, CentredShortcutMatchesBarycentricMap) {
  const Weight w = Weight::cosine();
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily f = waldron_points(s, 7, w);
  for (const auto& node : f.nodes) {
    EXPECT_TRUE(
        node.cartesian.isApprox(s.from_barycentric(node.barycentric), 1e-12));
  }
}

TEST(WaldronPoints, NonCentredSimplexSupported) {
  const Weight w = Weight::quadratic_piecewise();
  const Simplex s = Simplex::unit(2);
  const NodeFamily f = waldron_points(s, 4, w);
  for (const auto& node : f.nodes) {
    EXPECT_TRUE(
        node.cartesian.isApprox(s.from_barycentric(node.barycentric), 1e-12));
  }
}

TEST(WaldronPoints, VerticesStayFixed) {
  const Weight w = Weight::cosine();
  const Simplex s = Simplex::equilateral_triangle();
  const int n = 5;
  const NodeFamily f = waldron_points(s, n, w);
  for (const auto& node : f.nodes) {
    const auto it = std::max_element(node.index.begin(), node.index.end());
    if (*it != n) continue;
    const int j = static_cast<int>(it - node.index.begin());
    EXPECT_NEAR((node.cartesian - s.vertices().col(j)).norm(), 0.0, 1e-13);
  }
}

TEST(WaldronPoints, EdgeMidpointsStayOnEdges) {
  // Complementary weight: alpha = (n/2, n/2, 0) has w-sum 1, so the third
  // barycentric coordinate stays exactly 0.
  const Weight w = Weight::cosine();
  const Simplex s = Simplex::equilateral_triangle();
  const NodeFamily f = waldron_points(s, 4, w);
  for (const auto& node : f.nodes) {
    if (node.index == MultiIndex{2, 2, 0}) {
      EXPECT_NEAR(node.barycentric(2), 0.0, 1e-15);
      EXPECT_NEAR(node.barycentric(0), 0.5, 1e-15);
    }
  }
}

TEST(WaldronPoints, PermutationSymmetry) {
  const Weight w = Weight::cosine();
  const Simplex s = Simplex::equilateral_triangle();
  const int n = 6;
  const NodeFamily f = waldron_points(s, n, w);
  std::map<MultiIndex, Eigen::VectorXd> bary;
  for (const auto& node : f.nodes) bary[node.index] = node.barycentric;
  for (const auto& [alpha, lambda] : bary) {
    MultiIndex rotated = {alpha[1], alpha[2], alpha[0]};
    const Eigen::VectorXd& other = bary.at(rotated);
    EXPECT_NEAR(other(0), lambda(1), 1e-15);
    EXPECT_NEAR(other(1), lambda(2), 1e-15);
    EXPECT_NEAR(other(2), lambda(0), 1e-15);
  }
}

TEST(WaldronModified3D, FaceNodesMatch2DConstruction) {
  const Weight w = Weight::cosine();
  const Simplex tet = Simplex::centred_tetrahedron();
  const int n = 6;
  const NodeFamily f = waldron_points_modified_3d(tet, n, w);
  // Unmodified 2D rule on the abstract face coordinates.
  for (const auto& node : f.nodes) {
    std::vector<int> zero, pos;
    for (int j = 0; j < 4; ++j) {
      (node.index[static_cast<std::size_t>(j)] == 0 ? zero : pos).push_back(j);
    }
    for (int j : zero) EXPECT_EQ(node.barycentric(j), 0.0);
    if (pos.size() == 3) {
      // Face node: the three positive coordinates follow the 2D defect rule.
      double wsum = 0.0;
      for (int j : pos) wsum += w(static_cast<double>(node.index[static_cast<std::size_t>(j)]) / n);
      const double defect = (1.0 - wsum) / 3.0;
      for (int j : pos) {
        EXPECT_NEAR(node.barycentric(j),
                    w(static_cast<double>(node.index[static_cast<std::size_t>(j)]) / n) + defect,
                    1e-15);
      }
    }
    EXPECT_NEAR(node.barycentric.sum(), 1.0, 1e-13);
  }
}

TEST(WaldronModified3D, InteriorNodesUseAllFourCoordinates) {
  const Weight w = Weight::cosine();
  const Simplex tet = Simplex::centred_tetrahedron();
  const int n = 5;
  const NodeFamily f = waldron_points_modified_3d(tet, n, w);
  for (const auto& node : f.nodes) {
    const bool interior =
        std::all_of(node.index.begin(), node.index.end(), [](int a) { return a > 0; });
    if (!interior) continue;
    double wsum = 0.0;
    for (int j = 0; j < 4; ++j) wsum += node.baryweights(j);
    const double defect = (1.0 - wsum) / 4.0;
    for (int j = 0; j < 4; ++j) {
      EXPECT_NEAR(node.barycentric(j), node.baryweights(j) + defect, 1e-15);
      EXPECT_GT(node.barycentric(j), 0.0);
    }
  }
}

TEST(WaldronModified3D, RequiresTetrahedron) {
  EXPECT_THROW(
      waldron_points_modified_3d(Simplex::equilateral_triangle(), 3, Weight::cosine()),
      waldron::InvalidArgument);
}

TEST(SphericalPoints, OctantBasics) {
  const Weight w = Weight::cosine();
  for (int n : {1, 2, 5, 8}) {
    const auto pts = waldron::spherical_waldron_points(n, w);
    EXPECT_EQ(static_cast<std::int64_t>(pts.size()),
              waldron::simplex_lattice_size(n, 2));
    for (const auto& p : pts) {
      EXPECT_NEAR(p.norm(), 1.0, 1e-13);
      EXPECT_GE(p.minCoeff(), 0.0);
    }
  }
}

TEST(SphericalPoints, CornersMapToAxes) {
  const auto pts = waldron::spherical_waldron_points(3, Weight::cosine());
  // Enumeration starts at (0,0,n) -> e_3 and ends at (n,0,0) -> e_1.
  EXPECT_TRUE(pts.front().isApprox(Eigen::Vector3d::UnitZ(), 1e-13));
  EXPECT_TRUE(pts.back().isApprox(Eigen::Vector3d::UnitX(), 1e-13));
}

TEST(SphericalPoints, FullSphereCounts) {
  const Weight w = Weight::cosine();
  EXPECT_EQ(waldron::spherical_full_sphere(1, w).size(), 6u);
  EXPECT_EQ(waldron::spherical_full_sphere(2, w).size(), 18u);
  EXPECT_EQ(waldron::spherical_full_sphere(5, w).size(), 102u);
}

TEST(SphericalPoints, FullSphereHasAntipodalSymmetry) {
  const auto pts = waldron::spherical_full_sphere(3, Weight::cosine());
  for (const auto& p : pts) {
    const bool found = std::any_of(pts.begin(), pts.end(), [&](const auto& q) {
      return (q + p).norm() < 1e-9;
    });
    EXPECT_TRUE(found);
  }
}

TEST(FamilyMetadata, LabelsAndKinds) {
  const Simplex s = Simplex::equilateral_triangle();
  EXPECT_EQ(simplex_points(s, 2).label, "simplex");
  EXPECT_EQ(waldron_points(s, 2, Weight::cosine()).label, "waldron:cosine");
  EXPECT_STREQ(waldron::family_name(FamilyKind::WaldronModified3D), "waldron-mod3d");
  EXPECT_STREQ(waldron::family_name(FamilyKind::Concentric), "concentric");
}

TEST(FamilyMetadata, NegativeDegreeRejected) {
  const Simplex s = Simplex::equilateral_triangle();
  EXPECT_THROW(simplex_points(s, -1), waldron::InvalidArgument);
  EXPECT_THROW(waldron_points(s, -2, Weight::cosine()), waldron::InvalidArgument);
}
