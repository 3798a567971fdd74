#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohom/metrics/metric.hpp"

namespace cohom {

/// Shapes of a metric function when no orbit is singular.
enum class ExpShape { Two, One, Constant };  // a e^{dt} + b e^{-dt}, a e^{dt}, a

struct SweepStratum {
  std::string name;
  std::array<ExpShape, 3> shapes;
  /// Exponent coincidences imposed on the draw.
  bool d1_is_sum = false;  // d1 = d2 + d3
  bool d2_is_d3 = false;
};

const std::vector<SweepStratum>& sweep_strata();

struct SweepOptions {
  int draws = 10000;  // split evenly over the strata
  std::uint64_t seed = 0;
  double half_width = 20.0;  // t in [-T, T]
  int samples = 200;
  double tol = 1e-8;
};

struct StratumResult {
  std::string name;
  int draws = 0;
  int ch = 0;
  double min_deviation = 0.0;
};

struct SweepResult {
  std::vector<StratumResult> strata;
  int draws = 0;
  int ch = 0;
  std::uint64_t seed = 0;
};

/// Random exponential metrics on [-T, T]; counts the draws whose nine frame
/// components are constant to tol. Non-finite samples count as not constant.
SweepResult regular_orbit_sweep(const SweepOptions& opt = {});

/// Relative spread of the nine components over `samples` points of [lo, hi], without
/// the positivity cut used by is_curvature_homogeneous.
double component_spread(const DiagonalMetric& m, double lo, double hi, int samples);

}  // namespace cohom
