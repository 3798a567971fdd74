#include "cohom/classifier/regular_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cohom/curvature/curvature.hpp"

namespace cohom {

namespace {

using S = ExpShape;

ScalarFunction shape_function(ExpShape s, double a, double b, double d) {
  switch (s) {
    case S::Two: return ScalarFunction::exp(a, d) + ScalarFunction::exp(b, -d);
    case S::One: return ScalarFunction::exp(a, d);
    case S::Constant: return ScalarFunction::constant(a);
  }
  return {};
}

}  // namespace

const std::vector<SweepStratum>& sweep_strata() {
  // All-constant is left out: R times a Berger sphere is homogeneous.
  static const std::vector<SweepStratum> strata = {
      {"two,one,one", {S::Two, S::One, S::One}},
      {"two,one,one d1=d2+d3", {S::Two, S::One, S::One}, true},
      {"two,one,one d2=d3", {S::Two, S::One, S::One}, false, true},
      {"two,two,one", {S::Two, S::Two, S::One}},
      {"two,two,two", {S::Two, S::Two, S::Two}},
      {"one,one,one", {S::One, S::One, S::One}},
      {"two,one,const", {S::Two, S::One, S::Constant}},
      {"two,two,const", {S::Two, S::Two, S::Constant}},
      {"two,const,const", {S::Two, S::Constant, S::Constant}},
      {"one,one,const", {S::One, S::One, S::Constant}},
      {"one,const,const", {S::One, S::Constant, S::Constant}},
  };
  return strata;
}

double component_spread(const DiagonalMetric& m, double lo, double hi, int samples) {
  std::array<ScalarFunction, 3> d1, d2;
  for (int i = 0; i < 3; ++i) {
    d1[i] = differentiate(m.v[i]);
    d2[i] = differentiate(d1[i]);
  }
  std::array<double, 9> mn, mx, big{};
  mn.fill(std::numeric_limits<double>::infinity());
  mx.fill(-std::numeric_limits<double>::infinity());
  for (int k = 0; k < samples; ++k) {
    const double t = lo + (hi - lo) * k / (samples - 1);
    std::array<double, 3> v, dv, ddv;
    for (int i = 0; i < 3; ++i) {
      v[i] = m.v[i](t);
      dv[i] = d1[i](t);
      ddv[i] = d2[i](t);
    }
    const auto c = curvature_formula(v, dv, ddv);
    for (int i = 0; i < 9; ++i) {
      if (!std::isfinite(c[i])) return std::numeric_limits<double>::infinity();
      mn[i] = std::min(mn[i], c[i]);
      mx[i] = std::max(mx[i], c[i]);
      big[i] = std::max(big[i], std::abs(c[i]));
    }
  }
  double dev = 0;
  for (int i = 0; i < 9; ++i) dev = std::max(dev, (mx[i] - mn[i]) / (1.0 + big[i]));
  return dev;
}

SweepResult regular_orbit_sweep(const SweepOptions& opt) {
  SweepResult res;
  res.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> coef(0.1, 6.0), rate(0.1, 2.0);
  const auto& strata = sweep_strata();
  const int n = static_cast<int>(strata.size());
  for (int s = 0; s < n; ++s) {
    const SweepStratum& st = strata[s];
    StratumResult out;
    out.name = st.name;
    out.draws = opt.draws / n + (s < opt.draws % n ? 1 : 0);
    out.min_deviation = std::numeric_limits<double>::infinity();
    for (int k = 0; k < out.draws; ++k) {
      std::array<double, 3> a, b, d;
      for (int i = 0; i < 3; ++i) {
        a[i] = coef(rng);
        b[i] = coef(rng);
        d[i] = rate(rng);
      }
      if (st.d1_is_sum) d[0] = d[1] + d[2];
      if (st.d2_is_d3) d[2] = d[1];
      DiagonalMetric m;
      for (int i = 0; i < 3; ++i) m.v[i] = shape_function(st.shapes[i], a[i], b[i], d[i]);
      m.domain = {-opt.half_width, opt.half_width};
      const double dev = component_spread(m, m.domain.lo, m.domain.hi, opt.samples);
      out.min_deviation = std::min(out.min_deviation, dev);
      if (dev <= opt.tol) ++out.ch;
    }
    res.draws += out.draws;
    res.ch += out.ch;
    res.strata.push_back(out);
  }
  return res;
}

}  // namespace cohom
