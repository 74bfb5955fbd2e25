#pragma once

#include <span>

namespace waldron::golden {

/// Reference Lebesgue constants used by the table-reproduction checks.
/// Values are rounded to the precision shown; comparisons should allow for
/// that rounding on top of any grid tolerance.

struct Row2D {
  int degree;
  long long node_count;
  double waldron_cosine;
  double concentric;  // < 0 marks "not available" (no radii beyond degree 12)
  double simplex;
};

struct Row3D {
  int degree;
  long long node_count;
  double waldron_cosine;  // modified interior rule
  double simplex;
};

inline constexpr Row2D kTable2D[] = {
    {1, 3, 1.0, 1.0, 1.0},
    {2, 6, 1.67, 1.67, 1.67},
    {3, 10, 2.11, 2.11, 2.27},
    {4, 15, 2.78, 2.77, 3.47},
    {5, 21, 3.36, 4.11, 5.45},
    {6, 28, 3.95, 4.80, 8.74},
    {7, 36, 4.63, 6.01, 14.34},
    {8, 45, 5.83, 8.81, 24.00},
    {9, 55, 7.18, 10.75, 40.87},
    {10, 66, 9.45, 12.40, 70.88},
    {11, 78, 12.37, 18.28, 124.52},
    {12, 91, 16.91, 24.27, 221.19},
    {13, 105, 23.34, -1.0, 397.05},
    {14, 120, 33.04, -1.0, 720.26},
    {15, 136, 47.38, -1.0, 1315.77},
    {16, 153, 69.04, -1.0, 2418.43},
};

inline constexpr Row3D kTable3D[] = {
    {1, 4, 1.0, 1.0},
    {2, 10, 2.00, 2.00},
    {3, 20, 2.99, 3.02},
    {4, 35, 4.25, 4.89},
    {5, 56, 5.49, 8.08},
    {6, 84, 7.68, 13.65},
    {7, 120, 10.15, 23.37},
    {8, 165, 14.57, 40.45},
    {9, 220, 21.06, 71.00},
    {10, 286, 33.00, 126.13},
    {11, 364, 56.00, 225.42},
    {12, 455, 90.63, 406.01},
};

inline std::span<const Row2D> table_2d() { return kTable2D; }
inline std::span<const Row3D> table_3d() { return kTable3D; }

}  // namespace waldron::golden
