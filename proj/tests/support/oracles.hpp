#pragma once

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cohom/classifier/constraint_systems.hpp"
#include "cohom/metrics/metric.hpp"

// Reference computations that share no code path with the library routine they check.
namespace oracle {

/// Fourth-order centered difference.
double derivative(const std::function<double(double)>& f, double t, double h = 1e-3);
double second_derivative(const std::function<double(double)>& f, double t, double h = 1e-3);

/// Roots of a square or overdetermined polynomial system by exhaustive subdivision:
/// keep every cell on whose corners each residual takes both signs (or vanishes),
/// refine until the cell diameter is below `resolution`, cluster survivors.
/// Throws std::runtime_error when the surviving cells do not shrink to points.
std::vector<std::vector<double>> sign_change_roots(const cohom::ConstraintSystem& sys,
                                                   const std::vector<cohom::Param>& box, int grid = 50,
                                                   double resolution = 1e-9);

/// Nine components from the closed form, with derivatives of v taken by finite
/// differences instead of exact differentiation.
std::array<double, 9> components_fd(const cohom::DiagonalMetric& m, double t);

/// The constant component vectors of the catalog's diagonal entries, checked by hand:
/// (k12, k13, k23, m1, m2, m3, r1, r2, r3).
struct Expected {
  std::string id;
  std::array<double, 9> c;
};
const std::vector<Expected>& expected_components();

/// (a3 + b2 + b3)^2 (a3 - b2 + b3)^2 / ((a3 + b3)^2 a1^2 b2^2), typed in directly.
double printed_leading_coefficient(double a1, double b2, double a3, double b3);

/// A metric with pairwise distinct, positive, generic functions on [0, 1.5]:
/// almost surely not curvature homogeneous.
cohom::DiagonalMetric random_probe(std::mt19937_64& rng);

}  // namespace oracle
