#pragma once

#include <array>

#include <Eigen/Core>

#include "cohom/curvature/curvature.hpp"

namespace cohom {

/// Skew-symmetric A with A(E_i) = sum_m a_i^m E_m, stored as the six a_i^m with i < m
/// in the order (12, 13, 14, 23, 24, 34).
struct ConnectionTensorA {
  std::array<double, 6> a{};
  double residual = 0.0;
  /// Residual of the same system at A = 0, i.e. |dR/dt|.
  double residual_at_zero = 0.0;

  double entry(int i, int m) const;  // 0-based, skew
};

/// Pair (i, m), i < m, for each of the six unknowns (0-based).
inline constexpr std::array<std::array<int, 2>, 6> kSkewPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// The linear system d/dt R_ijkl = (A . R)_ijkl over the 20 independent index
/// combinations: rows are equations, columns the six unknowns, rhs = dR/dt.
void assemble_connection_system(const Tensor4& r, const Tensor4& dr, Eigen::Matrix<double, 20, 6>& lhs,
                                Eigen::Matrix<double, 20, 1>& rhs);

/// Least-squares A at t with the t-derivatives taken from the component series.
ConnectionTensorA solve_connection_A(const DiagonalMetric& m, double t, const CurvatureOptions& opt = {});

}  // namespace cohom
