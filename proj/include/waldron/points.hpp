#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "waldron/errors.hpp"
#include "waldron/multi_index.hpp"
#include "waldron/simplex.hpp"
#include "waldron/weights.hpp"

namespace waldron {

enum class FamilyKind {
  Simplex,
  Waldron,
  WaldronModified3D,
  Concentric,
  SphericalWaldron,
};

inline const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Simplex: return "simplex";
    case FamilyKind::Waldron: return "waldron";
    case FamilyKind::WaldronModified3D: return "waldron-mod3d";
    case FamilyKind::Concentric: return "concentric";
    case FamilyKind::SphericalWaldron: return "spherical";
  }
  return "?";
}

/// One interpolation node with its label and coordinate representations.
struct Node {
  /// Multi-index alpha with |alpha| = n, or {ring, slot} for concentric sets.
  MultiIndex index;
  Eigen::VectorXd cartesian;
  Eigen::VectorXd barycentric;
  /// w(alpha_j / n) before defect correction; empty when not applicable.
  Eigen::VectorXd baryweights;
};

/// A generated interpolation point set.  Immutable after generation.
struct NodeFamily {
  FamilyKind kind;
  std::string label;
  int degree = 0;
  Simplex simplex;
  std::optional<Weight> weight;
  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
};

namespace detail {

inline Node barycentre_node(const Simplex& s) {
  const int d = s.dim();
  Node node;
  node.index.assign(static_cast<std::size_t>(d) + 1, 0);
  node.barycentric =
      Eigen::VectorXd::Constant(d + 1, 1.0 / static_cast<double>(d + 1));
  node.cartesian = s.from_barycentric(node.barycentric);
  return node;
}

}  // namespace detail

/// Nodes at barycentric alpha/n for all |alpha| = n: the equispaced lattice.
inline NodeFamily simplex_points(const Simplex& s, int n) {
  if (n < 0) throw InvalidArgument("simplex_points: degree must be >= 0");
  const int d = s.dim();
  NodeFamily family{FamilyKind::Simplex, "simplex", n, s, std::nullopt, {}};
  if (n == 0) {
    family.nodes.push_back(detail::barycentre_node(s));
    return family;
  }
  family.nodes.reserve(static_cast<std::size_t>(simplex_lattice_size(n, d)));
  for_each_multi_index(n, d, [&](const MultiIndex& alpha) {
    Node node;
    node.index = alpha;
    node.barycentric.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
      node.barycentric(j) = static_cast<double>(alpha[static_cast<std::size_t>(j)]) / n;
    }
    node.cartesian = s.from_barycentric(node.barycentric);
    family.nodes.push_back(std::move(node));
  });
  return family;
}

/// Nodes at barycentric omega_j = w(alpha_j/n) + (1 - sum_i w(alpha_i/n))/(d+1).
/// For a centred simplex the defect term drops out of the Cartesian position,
/// and that shortcut (sum of w(alpha_j/n) V_j) is used directly.
inline NodeFamily waldron_points(const Simplex& s, int n, const Weight& w) {
  if (n < 0) throw InvalidArgument("waldron_points: degree must be >= 0");
  const int d = s.dim();
  NodeFamily family{FamilyKind::Waldron, "waldron:" + w.name(), n, s, w, {}};
  if (n == 0) {
    family.nodes.push_back(detail::barycentre_node(s));
    return family;
  }
  const bool centred = s.is_centred();
  family.nodes.reserve(static_cast<std::size_t>(simplex_lattice_size(n, d)));
  for_each_multi_index(n, d, [&](const MultiIndex& alpha) {
    Node node;
    node.index = alpha;
    node.baryweights.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
      node.baryweights(j) = w(static_cast<double>(alpha[static_cast<std::size_t>(j)]) / n);
    }
    const double defect = (1.0 - node.baryweights.sum()) / (d + 1);
    node.barycentric = (node.baryweights.array() + defect).matrix();
    node.cartesian = centred ? (s.vertices() * node.baryweights).eval()
                             : s.from_barycentric(node.barycentric);
    family.nodes.push_back(std::move(node));
  });
  return family;
}

/// 3D variant: coordinates with alpha_j = 0 are pinned to 0 and the defect is
/// spread over the k nonzero coordinates only, so face nodes coincide with
/// the 2D construction on that face.
inline NodeFamily waldron_points_modified_3d(const Simplex& s, int n,
                                             const Weight& w) {
  if (s.dim() != 3) {
    throw InvalidArgument("waldron_points_modified_3d: simplex must be 3D");
  }
  if (n < 0) throw InvalidArgument("waldron_points_modified_3d: degree >= 0");
  NodeFamily family{FamilyKind::WaldronModified3D, "waldron-mod3d:" + w.name(), n,
                    s, w, {}};
  if (n == 0) {
    family.nodes.push_back(detail::barycentre_node(s));
    return family;
  }
  family.nodes.reserve(static_cast<std::size_t>(simplex_lattice_size(n, 3)));
  for_each_multi_index(n, 3, [&](const MultiIndex& alpha) {
    Node node;
    node.index = alpha;
    node.baryweights.resize(4);
    int nonzero = 0;
    double wsum = 0.0;
    for (int j = 0; j < 4; ++j) {
      node.baryweights(j) = w(static_cast<double>(alpha[static_cast<std::size_t>(j)]) / n);
      if (alpha[static_cast<std::size_t>(j)] > 0) {
        ++nonzero;
        wsum += node.baryweights(j);
      }
    }
    const double defect = (1.0 - wsum) / nonzero;
    node.barycentric.resize(4);
    for (int j = 0; j < 4; ++j) {
      node.barycentric(j) = alpha[static_cast<std::size_t>(j)] > 0
                                ? node.baryweights(j) + defect
                                : 0.0;
    }
    node.cartesian = s.from_barycentric(node.barycentric);
    family.nodes.push_back(std::move(node));
  });
  return family;
}

/// Octant point set on the unit sphere: for each |alpha| = n the unit vector
/// (sqrt(w(alpha_1/n)), sqrt(w(alpha_2/n)), sqrt(w(alpha_3/n))) normalized.
inline std::vector<Eigen::Vector3d> spherical_waldron_points(int n,
                                                             const Weight& w) {
  if (n < 1) throw InvalidArgument("spherical_waldron_points: degree >= 1");
  std::vector<Eigen::Vector3d> points;
  points.reserve(static_cast<std::size_t>(simplex_lattice_size(n, 2)));
  for_each_multi_index(n, 2, [&](const MultiIndex& alpha) {
    Eigen::Vector3d v;
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double wj = w(static_cast<double>(alpha[static_cast<std::size_t>(j)]) / n);
      v(j) = std::sqrt(wj);
      sum += wj;
    }
    points.push_back(v / std::sqrt(sum));
  });
  return points;
}

/// Reflect the octant set through all sign patterns and deduplicate the
/// shared boundary points; the result has 4n^2 + 2 points.
inline std::vector<Eigen::Vector3d> spherical_full_sphere(int n,
                                                          const Weight& w) {
  const std::vector<Eigen::Vector3d> octant = spherical_waldron_points(n, w);
  std::vector<Eigen::Vector3d> all;
  all.reserve(octant.size() * 8);
  for (int signs = 0; signs < 8; ++signs) {
    Eigen::Vector3d flip((signs & 1) ? -1.0 : 1.0, (signs & 2) ? -1.0 : 1.0,
                         (signs & 4) ? -1.0 : 1.0);
    for (const Eigen::Vector3d& p : octant) {
      all.emplace_back(p.cwiseProduct(flip));
    }
  }
  auto lex_less = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    for (int i = 0; i < 3; ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  };
  std::sort(all.begin(), all.end(), lex_less);
  // Reflections duplicate points only where a component is exactly zero, so
  // duplicates are adjacent after sorting.
  auto near = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return (a - b).lpNorm<Eigen::Infinity>() <= 1e-9;
  };
  all.erase(std::unique(all.begin(), all.end(), near), all.end());
  return all;
}

}  // namespace waldron
