#pragma once

#include "cohom/curvature/curvature.hpp"

namespace cohom {

/// Sectional curvatures of dt^2 + f^2 (dphi^2 + sin^2 phi dpsi^2) + g^2 dtheta^2 from coordinate
/// Christoffel symbols, differentiated numerically, at (t, phi).
ProductCurvature product_curvature_from_coordinates(const ProductMetric& m, double t, double phi = 1.0,
                                                    double h = 1e-4);

}  // namespace cohom
