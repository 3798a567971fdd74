#pragma once

#include <array>
#include <optional>

#include <Eigen/Core>

#include "cohom/analytic/scalar_function.hpp"
#include "cohom/metrics/group_diagram.hpp"

namespace cohom {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// dt^2 + sum_i v_i(t)^2 theta_i^2 for SU(2) with [X_i, X_j] = 2 X_k.
struct DiagonalMetric {
  std::array<ScalarFunction, 3> v;
  Interval domain;
  std::optional<GroupDiagram> diagram;
};

/// dt^2 + f(t)^2 g_{S^2} + g(t)^2 d theta^2 for SO(3)SO(2).
struct ProductMetric {
  ScalarFunction f;
  ScalarFunction g;
  Interval domain;
};

/// Symmetric 3x3 matrix P_t with diagonal f_i and off-diagonal d_ij.
struct FullMetricEndo {
  ScalarFunction f1, f2, f3, d12, d13, d23;
  Interval domain;

  Eigen::Matrix3d at(double t) const;
};

/// v_i -> lambda * v_i(t / lambda) on the domain scaled by lambda: a homothety by lambda.
DiagonalMetric scale_metric(const DiagonalMetric& m, double lambda);
ProductMetric scale_metric(const ProductMetric& m, double lambda);

/// Multiply every metric function by b without reparametrizing t.
DiagonalMetric scale_functions(const DiagonalMetric& m, double b);

/// t -> hi - t, moving the upper end to 0. The diagram is dropped.
DiagonalMetric reflect(const DiagonalMetric& m);
ProductMetric reflect(const ProductMetric& m);

/// Reorder functions: result.v[i] = m.v[perm[i]].
DiagonalMetric permute(const DiagonalMetric& m, const std::array<int, 3>& perm);

/// diag(v_1^2, v_2^2, v_3^2) at t.
Eigen::Matrix3d metric_matrix(const DiagonalMetric& m, double t);

}  // namespace cohom
