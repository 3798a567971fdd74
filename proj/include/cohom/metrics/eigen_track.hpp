#pragma once

#include <vector>

#include "cohom/metrics/metric.hpp"

namespace cohom {

struct EigenSegment {
  Interval span;
  /// Multiplicities of the eigenvalues in descending order, e.g. {2, 1}.
  std::vector<int> pattern;
};

struct EigenTrack {
  std::vector<EigenSegment> segments;
  std::vector<double> crossings;
};

struct EigenTrackOptions {
  int samples = 512;
  double tol_cross = 1e-9;
  /// Eigenvalues closer than this (relative) are one eigenvalue.
  double merge_tol = 1e-8;
};

/// Split the interval at the points where two eigenvalues of P_t meet.
/// Throws DegenerateMetric if P_t is numerically singular at a sample.
EigenTrack eigen_track(const FullMetricEndo& p, Interval interval, const EigenTrackOptions& opt = {});

/// Sorted descending eigenvalues of the symmetric matrix P_t.
Eigen::Vector3d sorted_eigenvalues(const FullMetricEndo& p, double t);

std::vector<int> multiplicity_pattern(const Eigen::Vector3d& descending, double merge_tol);

}  // namespace cohom
