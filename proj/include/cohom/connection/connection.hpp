#pragma once

#include <array>

#include "cohom/curvature/curvature.hpp"

namespace cohom {

/// gamma[a][b][c] = <nabla_{E_a} E_b, E_c>, E4 = gamma' at index 3.
///
/// The frame is the G-invariant extension of E_i = X_i / v_i along gamma, for which
/// [E_i, E_j] = 2 v_k / (v_i v_j) E_k (cyclic) and [E_4, E_i] = -(v_i'/v_i) E_i.
/// Along gamma it agrees with the normalized action fields. Every frame component
/// of a G-invariant tensor is then a function of t alone.
struct ChristoffelFrame {
  double gamma[4][4][4] = {};
  /// <[E_a, E_b], E_c>
  double bracket[4][4][4] = {};
};

ChristoffelFrame christoffels(const DiagonalMetric& m, double t);

/// The nine components rebuilt from the connection: Gamma at t and Richardson-extrapolated
/// centered differences of Gamma in t.
CurvatureData curvature_from_connection(const DiagonalMetric& m, double t, double h = 3e-4);
/// The full tensor R(E_a,E_b,E_c,E_d) from the same construction.
Tensor4 tensor_from_connection(const DiagonalMetric& m, double t, double h = 3e-4);

/// Frobenius norm of nabla Ric in the frame; d/dt terms from exact series.
double nabla_ricci_norm(const DiagonalMetric& m, double t);
/// Frobenius norm of nabla R in the frame.
double nabla_R_norm(const DiagonalMetric& m, double t);

/// Product metrics: orthonormal frame (sphere, sphere, circle, gamma'). The intrinsic
/// rotation term of the round sphere is left out because it acts by an infinitesimal
/// rotation of the sphere plane, under which R and Ric are invariant.
double nabla_ricci_norm(const ProductMetric& m, double t);
double nabla_R_norm(const ProductMetric& m, double t);

}  // namespace cohom
