#include "cohom/metrics/metric.hpp"

#include <stdexcept>

namespace cohom {

Eigen::Matrix3d FullMetricEndo::at(double t) const {
  Eigen::Matrix3d p;
  p << f1(t), d12(t), d13(t),
       d12(t), f2(t), d23(t),
       d13(t), d23(t), f3(t);
  return p;
}

DiagonalMetric scale_metric(const DiagonalMetric& m, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("scale factor must be positive");
  DiagonalMetric out = m;
  for (auto& f : out.v) f = lambda * compose_affine(f, 1.0 / lambda, 0.0);
  out.domain = {lambda * m.domain.lo, lambda * m.domain.hi};
  return out;
}

ProductMetric scale_metric(const ProductMetric& m, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("scale factor must be positive");
  return {lambda * compose_affine(m.f, 1.0 / lambda, 0.0), lambda * compose_affine(m.g, 1.0 / lambda, 0.0),
          {lambda * m.domain.lo, lambda * m.domain.hi}};
}

DiagonalMetric scale_functions(const DiagonalMetric& m, double b) {
  DiagonalMetric out = m;
  for (auto& f : out.v) f = b * f;
  return out;
}

DiagonalMetric reflect(const DiagonalMetric& m) {
  DiagonalMetric out;
  for (int i = 0; i < 3; ++i) out.v[i] = compose_affine(m.v[i], -1.0, m.domain.hi);
  out.domain = {0.0, m.domain.hi - m.domain.lo};
  return out;
}

ProductMetric reflect(const ProductMetric& m) {
  return {compose_affine(m.f, -1.0, m.domain.hi), compose_affine(m.g, -1.0, m.domain.hi),
          {0.0, m.domain.hi - m.domain.lo}};
}

DiagonalMetric permute(const DiagonalMetric& m, const std::array<int, 3>& perm) {
  DiagonalMetric out = m;
  for (int i = 0; i < 3; ++i) out.v[i] = m.v[perm[i]];
  return out;
}

Eigen::Matrix3d metric_matrix(const DiagonalMetric& m, double t) {
  Eigen::Matrix3d p = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 3; ++i) {
    const double x = m.v[i](t);
    p(i, i) = x * x;
  }
  return p;
}

}  // namespace cohom
