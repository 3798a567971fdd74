#include "cohom/connection/product_oracle.hpp"

#include <cmath>

namespace cohom {

namespace {

// Coordinates (t, phi, psi, theta). Metric is diagonal, so Gamma^k_ij needs only g_kk and its derivatives.
struct Coord {
  double g[4];
  double dg[4][4];  // dg[i][k] = d_i g_kk
};

struct Chris {
  double c[4][4][4] = {};  // c[k][i][j] = Gamma^k_ij
};

Chris christoffel(const ProductMetric& m, const ScalarFunction& df, const ScalarFunction& dg, double t, double phi) {
  const double f = m.f(t), g = m.g(t), fp = df(t), gp = dg(t), s = std::sin(phi), co = std::cos(phi);
  Coord x{};
  x.g[0] = 1.0;
  x.g[1] = f * f;
  x.g[2] = f * f * s * s;
  x.g[3] = g * g;
  x.dg[0][1] = 2 * f * fp;
  x.dg[0][2] = 2 * f * fp * s * s;
  x.dg[0][3] = 2 * g * gp;
  x.dg[1][2] = 2 * f * f * s * co;
  Chris ch;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double v = 0.0;
        if (j == k) v += x.dg[i][k];
        if (i == k) v += x.dg[j][k];
        if (i == j) v -= x.dg[k][i];
        ch.c[k][i][j] = 0.5 * v / x.g[k];
      }
  return ch;
}

}  // namespace

ProductCurvature product_curvature_from_coordinates(const ProductMetric& m, double t, double phi, double h) {
  const auto df = differentiate(m.f), dg = differentiate(m.g);
  auto at = [&](double tt, double pp) { return christoffel(m, df, dg, tt, pp); };
  const Chris c0 = at(t, phi);
  // d[i] Gamma for i = t, phi, Richardson on two centered differences
  double d[2][4][4][4] = {};
  for (int dir = 0; dir < 2; ++dir) {
    auto shifted = [&](double step) {
      return dir == 0 ? std::pair{at(t + step, phi), at(t - step, phi)} : std::pair{at(t, phi + step), at(t, phi - step)};
    };
    const auto [p1, m1] = shifted(h);
    const auto [p2, m2] = shifted(h / 2);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const double a = (p1.c[k][i][j] - m1.c[k][i][j]) / (2 * h);
          const double b = (p2.c[k][i][j] - m2.c[k][i][j]) / h;
          d[dir][k][i][j] = (4 * b - a) / 3;
        }
  }
  auto dGamma = [&](int i, int l, int j, int k) { return i < 2 ? d[i][l][j][k] : 0.0; };
  // (R(d_i, d_j) d_j)^i / g_jj
  const double f = m.f(t), g = m.g(t), s = std::sin(phi);
  const double gdiag[4] = {1.0, f * f, f * f * s * s, g * g};
  auto sec = [&](int i, int j) {
    const int l = i, k = j;
    double v = dGamma(i, l, j, k) - dGamma(j, l, i, k);
    for (int q = 0; q < 4; ++q) v += c0.c[l][i][q] * c0.c[q][j][k] - c0.c[l][j][q] * c0.c[q][i][k];
    return v / gdiag[j];
  };
  return {sec(1, 2), sec(1, 3), sec(0, 1), sec(0, 3)};
}

}  // namespace cohom
