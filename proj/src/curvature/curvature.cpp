#include "cohom/curvature/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

void require_positive(const DiagonalMetric& m, double t) {
  for (int i = 0; i < 3; ++i) {
    const double x = m.v[i](t);
    if (!(x > kEpsPos))
      throw DomainError("v" + std::to_string(i + 1) + "(" + std::to_string(t) + ") = " + std::to_string(x) +
                        " is not positive");
  }
}

struct Derivs {
  std::array<ScalarFunction, 3> d1, d2;
};

Derivs derivatives(const DiagonalMetric& m) {
  Derivs d;
  for (int i = 0; i < 3; ++i) {
    d.d1[i] = differentiate(m.v[i]);
    d.d2[i] = differentiate(d.d1[i]);
  }
  return d;
}

void put_pair(Tensor4& r, int a, int b, int c, int d, double x) {
  // all images of R(a,b,c,d) = x under the pair symmetries
  r[tidx(a, b, c, d)] = x;
  r[tidx(b, a, c, d)] = -x;
  r[tidx(a, b, d, c)] = -x;
  r[tidx(b, a, d, c)] = x;
  r[tidx(c, d, a, b)] = x;
  r[tidx(d, c, a, b)] = -x;
  r[tidx(c, d, b, a)] = -x;
  r[tidx(d, c, b, a)] = x;
}

}  // namespace

CurvatureData curvature_components(const DiagonalMetric& m, double t, const CurvatureOptions& opt) {
  require_positive(m, t);
  std::array<double, 3> v, dv, ddv;
  for (int i = 0; i < 3; ++i) {
    const auto d1 = differentiate(m.v[i]);
    v[i] = m.v[i](t);
    dv[i] = d1(t);
    ddv[i] = differentiate(d1)(t);
  }
  return curvature_formula(v, dv, ddv, opt);
}

Components<TaylorSeries> component_series(const DiagonalMetric& m, double t0, int order,
                                          const CurvatureOptions& opt) {
  for (int i = 0; i < 3; ++i)
    if (std::abs(m.v[i](t0)) <= kEpsPos)
      throw PoleError("v" + std::to_string(i + 1) + " vanishes at t0 = " + std::to_string(t0));
  const auto d = derivatives(m);
  std::array<TaylorSeries, 3> v, dv, ddv;
  for (int i = 0; i < 3; ++i) {
    v[i] = taylor_at(m.v[i], t0, order);
    dv[i] = taylor_at(d.d1[i], t0, order);
    ddv[i] = taylor_at(d.d2[i], t0, order);
  }
  return curvature_formula(v, dv, ddv, opt);
}

Components<LaurentSeries> component_laurent(const DiagonalMetric& m, double t0, int order) {
  const auto d = derivatives(m);
  std::array<LaurentSeries, 3> v, dv, ddv;
  for (int i = 0; i < 3; ++i) {
    // one extra order so that dividing out the zero keeps `order` known coefficients
    const auto s = taylor_at(m.v[i], t0, order + 1);
    double mag = 0.0;
    for (double c : s.coeffs()) mag = std::max(mag, std::abs(c));
    if (std::abs(s[0]) > kEpsPos * std::max(1.0, mag)) {
      v[i] = LaurentSeries(taylor_at(m.v[i], t0, order));
    } else {
      if (std::abs(s[1]) <= kEpsPos * std::max(1.0, mag))
        throw PoleOrderError("v" + std::to_string(i + 1) + " has a zero of order > 1 at t0 = " + std::to_string(t0));
      v[i] = LaurentSeries::with_valuation(s, 1);
    }
    dv[i] = LaurentSeries(taylor_at(d.d1[i], t0, order));
    ddv[i] = LaurentSeries(taylor_at(d.d2[i], t0, order));
  }
  return curvature_formula(v, dv, ddv);
}

Tensor4 full_tensor(const CurvatureData& c) {
  Tensor4 r{};
  put_pair(r, 0, 1, 0, 1, c.kappa[0]);
  put_pair(r, 0, 2, 0, 2, c.kappa[1]);
  put_pair(r, 1, 2, 1, 2, c.kappa[2]);
  for (int i = 0; i < 3; ++i) put_pair(r, i, 3, i, 3, c.radial[i]);
  put_pair(r, 1, 2, 0, 3, c.mixed[0]);
  put_pair(r, 2, 0, 1, 3, c.mixed[1]);
  put_pair(r, 0, 1, 2, 3, c.mixed[2]);
  return r;
}

CurvatureData from_tensor(const Tensor4& r) {
  CurvatureData c;
  c.kappa = {r[tidx(0, 1, 0, 1)], r[tidx(0, 2, 0, 2)], r[tidx(1, 2, 1, 2)]};
  c.mixed = {r[tidx(1, 2, 0, 3)], r[tidx(2, 0, 1, 3)], r[tidx(0, 1, 2, 3)]};
  c.radial = {r[tidx(0, 3, 0, 3)], r[tidx(1, 3, 1, 3)], r[tidx(2, 3, 2, 3)]};
  return c;
}

std::array<double, 4> ricci(const CurvatureData& c) {
  return {c.kappa[0] + c.kappa[1] + c.radial[0], c.kappa[0] + c.kappa[2] + c.radial[1],
          c.kappa[1] + c.kappa[2] + c.radial[2], c.radial[0] + c.radial[1] + c.radial[2]};
}

std::array<double, 4> ricci(const DiagonalMetric& m, double t) { return ricci(curvature_components(m, t)); }

double scalar_curvature(const DiagonalMetric& m, double t) {
  const auto r = ricci(m, t);
  return r[0] + r[1] + r[2] + r[3];
}

namespace {

template <class T>
std::array<T, 4> product_formula(const T& f, const T& df, const T& ddf, const T& g, const T& dg, const T& ddg) {
  return {(1.0 - df * df) / (f * f), -(df * dg) / (f * g), -(ddf / f), -(ddg / g)};
}

}  // namespace

ProductCurvature curvature_components_product(const ProductMetric& m, double t) {
  const double f = m.f(t), g = m.g(t);
  if (!(f > kEpsPos) || !(g > kEpsPos)) throw DomainError("product metric function not positive at t = " + std::to_string(t));
  const auto df = differentiate(m.f), dg = differentiate(m.g);
  const auto s = product_formula(f, df(t), differentiate(df)(t), g, dg(t), differentiate(dg)(t));
  return {s[0], s[1], s[2], s[3]};
}

std::array<TaylorSeries, 4> product_series(const ProductMetric& m, double t0, int order) {
  if (std::abs(m.f(t0)) <= kEpsPos || std::abs(m.g(t0)) <= kEpsPos)
    throw PoleError("product metric function vanishes at t0 = " + std::to_string(t0));
  const auto df = differentiate(m.f), dg = differentiate(m.g);
  return product_formula(taylor_at(m.f, t0, order), taylor_at(df, t0, order), taylor_at(differentiate(df), t0, order),
                         taylor_at(m.g, t0, order), taylor_at(dg, t0, order), taylor_at(differentiate(dg), t0, order));
}

Interval sampling_window(const DiagonalMetric& m, double margin_fraction) {
  const double len = m.domain.length();
  Interval w{m.domain.lo + margin_fraction * len, m.domain.hi - margin_fraction * len};
  if (!(w.hi > w.lo)) throw DomainError("sampling window is empty");
  // walk forward and stop short of the first zero of any v_i
  const int scan = 4000;
  for (int k = 0; k <= scan; ++k) {
    const double t = w.lo + (w.hi - w.lo) * k / scan;
    for (const auto& f : m.v) {
      if (f(t) <= kEpsPos) {
        if (k == 0) throw DomainError("metric function is not positive at the start of the sampling window");
        const double stop = w.lo + (w.hi - w.lo) * (k - 1) / scan;
        w.hi = std::max(w.lo, stop - 1e-3);
        if (!(w.hi > w.lo)) throw DomainError("sampling window is empty");
        return w;
      }
    }
  }
  return w;
}

namespace {

template <class Eval>
CHResult constancy(Interval w, int samples, int ncomp, double tol, Eval eval) {
  CHResult res;
  res.window = w;
  const int n = std::max(samples, 2);
  std::vector<double> lo(ncomp, std::numeric_limits<double>::infinity()), hi(ncomp, -lo[0]), big(ncomp, 0.0),
      sum(ncomp, 0.0);
  bool finite = true;
  for (int k = 0; k < n; ++k) {
    const double t = w.lo + w.length() * k / (n - 1);
    const auto c = eval(t);
    for (int i = 0; i < ncomp; ++i) {
      if (!std::isfinite(c[i])) finite = false;
      lo[i] = std::min(lo[i], c[i]);
      hi[i] = std::max(hi[i], c[i]);
      big[i] = std::max(big[i], std::abs(c[i]));
      sum[i] += c[i];
    }
  }
  double dev = 0.0;
  for (int i = 0; i < ncomp; ++i) {
    dev = std::max(dev, (hi[i] - lo[i]) / (1.0 + big[i]));
    if (i < 9) res.mean[i] = sum[i] / n;
  }
  if (!finite) dev = std::numeric_limits<double>::infinity();
  res.max_deviation = dev;
  res.verdict = dev <= tol;
  return res;
}

}  // namespace

CHResult is_curvature_homogeneous(const DiagonalMetric& m, const CHOptions& opt) {
  const Interval w = sampling_window(m, opt.margin_fraction);
  Derivs d = derivatives(m);
  return constancy(w, opt.samples, 9, opt.tol, [&](double t) {
    std::array<double, 3> v, dv, ddv;
    for (int i = 0; i < 3; ++i) {
      v[i] = m.v[i](t);
      dv[i] = d.d1[i](t);
      ddv[i] = d.d2[i](t);
    }
    const auto c = curvature_formula(v, dv, ddv, opt.curvature);
    std::array<double, 9> out;
    for (int i = 0; i < 9; ++i) out[i] = c[i];
    return out;
  });
}

CHResult is_curvature_homogeneous(const ProductMetric& m, const CHOptions& opt) {
  const double len = m.domain.length();
  const Interval w{m.domain.lo + opt.margin_fraction * len, m.domain.hi - opt.margin_fraction * len};
  if (!(w.hi > w.lo)) throw DomainError("sampling window is empty");
  return constancy(w, opt.samples, 4, opt.tol, [&](double t) {
    const auto c = curvature_components_product(m, t);
    return std::array<double, 4>{c.sec12, c.secT, c.sec4, c.secT4};
  });
}

}  // namespace cohom
