#pragma once

#include <array>

#include "cohom/analytic/laurent_series.hpp"
#include "cohom/analytic/taylor_series.hpp"
#include "cohom/metrics/metric.hpp"

namespace cohom {

/// The nine frame components that can be nonzero for a diagonal metric.
///
/// kappa  = R(E1,E2,E1,E2), R(E1,E3,E1,E3), R(E2,E3,E2,E3)
/// mixed  = R(E2,E3,E1,E4), R(E3,E1,E2,E4), R(E1,E2,E3,E4)   (cyclic, so sigma = +1)
/// radial = R(E1,E4,E1,E4), R(E2,E4,E2,E4), R(E3,E4,E3,E4)
/// R(X,Y,X,Y) is the sectional curvature of an orthonormal pair; E4 = gamma'.
template <class T>
struct Components {
  std::array<T, 3> kappa;
  std::array<T, 3> mixed;
  std::array<T, 3> radial;

  T& operator[](int i) { return i < 3 ? kappa[i] : i < 6 ? mixed[i - 3] : radial[i - 6]; }
  const T& operator[](int i) const { return i < 3 ? kappa[i] : i < 6 ? mixed[i - 3] : radial[i - 6]; }
};

using CurvatureData = Components<double>;

inline constexpr double kEpsPos = 1e-10;
inline constexpr const char* kComponentNames[9] = {"k12", "k13", "k23", "m1", "m2", "m3", "r1", "r2", "r3"};

/// Sign applied to the mixed components. Anything but +1 is a deliberately broken
/// formula, used only to show that the cross-checks notice.
struct CurvatureOptions {
  double mixed_sign = 1.0;
};

/// Closed-form components from v, v', v'' in any scalar type with field operations.
template <class T>
Components<T> curvature_formula(const std::array<T, 3>& v, const std::array<T, 3>& dv, const std::array<T, 3>& ddv,
                                const CurvatureOptions& opt = {}) {
  Components<T> c;
  std::array<T, 3> sq{v[0] * v[0], v[1] * v[1], v[2] * v[2]};
  std::array<T, 3> log_d{dv[0] / v[0], dv[1] / v[1], dv[2] / v[2]};
  const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (int p = 0; p < 3; ++p) {
    const int i = pairs[p][0], j = pairs[p][1], k = pairs[p][2];
    const T diff = sq[i] - sq[j];
    c.kappa[p] = (2.0 * sq[k] * (sq[i] + sq[j]) - 3.0 * sq[k] * sq[k] + diff * diff) / (sq[i] * sq[j] * sq[k]) -
                 log_d[i] * log_d[j];
  }
  // R(E_i,E_j,E_k,E_4) for (i,j,k) = (2,3,1), (3,1,2), (1,2,3)
  const int cyc[3][3] = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  for (int p = 0; p < 3; ++p) {
    const int i = cyc[p][0], j = cyc[p][1], k = cyc[p][2];
    const T vvv = v[i] * v[j] * v[k];
    c.mixed[p] = opt.mixed_sign * (-2.0 * dv[k] / (v[i] * v[j]) + log_d[i] * (sq[i] + sq[k] - sq[j]) / vvv +
                                   log_d[j] * (sq[j] + sq[k] - sq[i]) / vvv);
  }
  for (int i = 0; i < 3; ++i) c.radial[i] = -(ddv[i] / v[i]);
  return c;
}

/// Components at an interior time. Throws DomainError if some v_i(t) <= kEpsPos.
CurvatureData curvature_components(const DiagonalMetric& m, double t, const CurvatureOptions& opt = {});

/// Each component as a Taylor series at t0. Throws PoleError at a zero of some v_i.
Components<TaylorSeries> component_series(const DiagonalMetric& m, double t0, int order = kDefaultSeriesOrder,
                                          const CurvatureOptions& opt = {});

/// Laurent expansion at a point where some v_i have simple zeros.
/// Throws PoleOrderError when a zero is not simple.
Components<LaurentSeries> component_laurent(const DiagonalMetric& m, double t0, int order = kDefaultSeriesOrder);

/// Full R(E_a,E_b,E_c,E_d), index ((a*4+b)*4+c)*4+d with E4 at index 3.
using Tensor4 = std::array<double, 256>;
inline constexpr int tidx(int a, int b, int c, int d) { return ((a * 4 + b) * 4 + c) * 4 + d; }
Tensor4 full_tensor(const CurvatureData& c);
CurvatureData from_tensor(const Tensor4& r);

/// Ric(E1..E4); off-diagonal entries vanish for diagonal metrics.
std::array<double, 4> ricci(const DiagonalMetric& m, double t);
std::array<double, 4> ricci(const CurvatureData& c);
double scalar_curvature(const DiagonalMetric& m, double t);

struct ProductCurvature {
  double sec12 = 0;  // the two sphere directions
  double secT = 0;   // sphere direction with the circle
  double sec4 = 0;   // sphere direction with gamma'
  double secT4 = 0;  // circle with gamma'
};

/// Sectional curvatures of dt^2 + f^2 g_{S^2} + g^2 dtheta^2; the curvature operator is diagonal.
ProductCurvature curvature_components_product(const ProductMetric& m, double t);
/// Same, as Taylor series in t (for derivatives along gamma).
std::array<TaylorSeries, 4> product_series(const ProductMetric& m, double t0, int order = kDefaultSeriesOrder);

struct CHOptions {
  int samples = 200;
  double tol = 1e-8;
  double margin_fraction = 0.05;
  CurvatureOptions curvature;
};

struct CHResult {
  bool verdict = false;
  double max_deviation = 0.0;
  Interval window;
  std::array<double, 9> mean{};  // component averages over the window
};

/// Sample the nine components; YES iff each one's (max - min) / (1 + max|c|) <= tol.
/// Throws DomainError if the sampling window is empty.
CHResult is_curvature_homogeneous(const DiagonalMetric& m, const CHOptions& opt = {});
CHResult is_curvature_homogeneous(const ProductMetric& m, const CHOptions& opt = {});

/// Window used for sampling: margins at both ends, cut before the first interior zero of any v_i.
Interval sampling_window(const DiagonalMetric& m, double margin_fraction);

}  // namespace cohom
