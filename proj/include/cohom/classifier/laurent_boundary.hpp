#pragma once

#include <vector>

#include "cohom/metrics/metric.hpp"

namespace cohom {

struct LaurentProfile {
  int component = 0;  // index into the nine components, see kComponentNames
  int low = -4;
  int high = 0;
  std::vector<double> coeffs;  // orders low..high
  double at(int k) const { return coeffs.at(k - low); }
};

/// Laurent expansion of one curvature component at t0, where v_i may have simple
/// zeros (several at once for a point orbit). Throws PoleOrderError if a zero is not
/// simple, ConfigError for a bad component index.
LaurentProfile laurent_boundary(const DiagonalMetric& m, int component, double t0, int high = 6);

/// v1 = a1 t, v2 = a2 sin(d2 t) + b2 cos(d2 t), v3 = a3 exp(d3 t) + b3 exp(-d3 t)
/// on [0, 1]; parameters in that order.
struct MixedBoundaryParams {
  double a1, a2, b2, d2, a3, b3, d3;
};
DiagonalMetric mixed_boundary_family(const MixedBoundaryParams& p);

/// The closed form of the order -2 coefficient of R(E2,E3,E2,E3) for that family.
double mixed_boundary_leading(const MixedBoundaryParams& p);

}  // namespace cohom
