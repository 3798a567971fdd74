#include "cohom/metrics/eigen_track.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "cohom/errors.hpp"

namespace cohom {

Eigen::Vector3d sorted_eigenvalues(const FullMetricEndo& p, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(p.at(t), Eigen::EigenvaluesOnly);
  Eigen::Vector3d ev = es.eigenvalues();  // ascending
  return {ev(2), ev(1), ev(0)};
}

std::vector<int> multiplicity_pattern(const Eigen::Vector3d& ev, double merge_tol) {
  std::vector<int> pat{1};
  for (int i = 1; i < 3; ++i) {
    const double scale = std::max({1.0, std::abs(ev(i - 1)), std::abs(ev(i))});
    if (ev(i - 1) - ev(i) <= merge_tol * scale) ++pat.back();
    else pat.push_back(1);
  }
  return pat;
}

namespace {

double golden_min(const std::function<double(double)>& f, double a, double b, double tol, double& fmin) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  fmin = f(x);
  return x;
}

}  // namespace

EigenTrack eigen_track(const FullMetricEndo& p, Interval iv, const EigenTrackOptions& opt) {
  if (!(iv.hi > iv.lo)) throw std::invalid_argument("eigen_track needs a non-empty interval");
  const int n = std::max(opt.samples, 3);
  std::vector<double> ts(n);
  std::vector<Eigen::Vector3d> evs(n);
  for (int k = 0; k < n; ++k) {
    ts[k] = iv.lo + iv.length() * k / (n - 1);
    evs[k] = sorted_eigenvalues(p, ts[k]);
    if (!(evs[k](2) > 1e-12 * std::max(1.0, std::abs(evs[k](0)))))
      throw DegenerateMetric("metric endomorphism is singular at t = " + std::to_string(ts[k]));
  }

  EigenTrack out;
  for (int gap = 0; gap < 2; ++gap) {
    auto g = [&](double t) {
      const auto ev = sorted_eigenvalues(p, t);
      return (ev(gap) - ev(gap + 1)) / std::max({1.0, std::abs(ev(gap))});
    };
    std::vector<double> gs(n);
    for (int k = 0; k < n; ++k) gs[k] = (evs[k](gap) - evs[k](gap + 1)) / std::max({1.0, std::abs(evs[k](gap))});
    // a gap that is closed everywhere is a persistent multiplicity, not a crossing
    if (*std::max_element(gs.begin(), gs.end()) <= opt.merge_tol) continue;
    for (int k = 1; k + 1 < n; ++k) {
      if (!(gs[k] <= gs[k - 1] && gs[k] <= gs[k + 1])) continue;
      double fmin = 0.0;
      const double t = golden_min(g, ts[k - 1], ts[k + 1], opt.tol_cross, fmin);
      if (fmin <= opt.merge_tol && t > iv.lo + opt.tol_cross && t < iv.hi - opt.tol_cross) out.crossings.push_back(t);
    }
  }
  std::sort(out.crossings.begin(), out.crossings.end());
  std::vector<double> merged;
  for (double t : out.crossings)
    if (merged.empty() || t - merged.back() > 10 * opt.tol_cross) merged.push_back(t);
  out.crossings = merged;

  std::vector<double> cuts{iv.lo};
  cuts.insert(cuts.end(), merged.begin(), merged.end());
  cuts.push_back(iv.hi);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    out.segments.push_back({{cuts[i], cuts[i + 1]}, multiplicity_pattern(sorted_eigenvalues(p, mid), opt.merge_tol)});
  }
  return out;
}

}  // namespace cohom
