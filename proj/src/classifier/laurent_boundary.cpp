#include "cohom/classifier/laurent_boundary.hpp"

#include <cmath>

#include "cohom/curvature/curvature.hpp"
#include "cohom/errors.hpp"

namespace cohom {

LaurentProfile laurent_boundary(const DiagonalMetric& m, int component, double t0, int high) {
  if (component < 0 || component > 8) throw ConfigError("component index must be in 0..8");
  // headroom: each division by a collapsing function costs known coefficients
  const auto all = component_laurent(m, t0, high + 8);
  const LaurentSeries& s = all[component];
  LaurentProfile p;
  p.component = component;
  p.high = high;
  for (int k = p.low; k <= high; ++k) p.coeffs.push_back(s.at(k));
  return p;
}

DiagonalMetric mixed_boundary_family(const MixedBoundaryParams& p) {
  DiagonalMetric m;
  m.v = {ScalarFunction::monomial(p.a1, 1), ScalarFunction::sin(p.a2, p.d2) + ScalarFunction::cos(p.b2, p.d2),
         ScalarFunction::exp(p.a3, p.d3) + ScalarFunction::exp(p.b3, -p.d3)};
  m.domain = {0.0, 1.0};
  return m;
}

double mixed_boundary_leading(const MixedBoundaryParams& p) {
  const double s = p.a3 + p.b3;
  return std::pow(s + p.b2, 2) * std::pow(s - p.b2, 2) / (s * s * p.a1 * p.a1 * p.b2 * p.b2);
}

}  // namespace cohom
