#include "cohom/connection/connection.hpp"

#include <cmath>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

ChristoffelFrame frame_from_values(const std::array<double, 3>& v, const std::array<double, 3>& dv) {
  ChristoffelFrame f;
  auto& C = f.bracket;
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& c : cyc) {
    const int i = c[0], j = c[1], k = c[2];
    C[i][j][k] = 2.0 * v[k] / (v[i] * v[j]);
    C[j][i][k] = -C[i][j][k];
  }
  for (int i = 0; i < 3; ++i) {
    C[3][i][i] = -dv[i] / v[i];
    C[i][3][i] = dv[i] / v[i];
  }
  // Koszul formula for an orthonormal frame with constant inner products
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) f.gamma[a][b][c] = 0.5 * (C[a][b][c] - C[b][c][a] + C[c][a][b]);
  return f;
}

ChristoffelFrame frame_at(const DiagonalMetric& m, const std::array<ScalarFunction, 3>& d1, double t) {
  std::array<double, 3> v, dv;
  for (int i = 0; i < 3; ++i) {
    v[i] = m.v[i](t);
    dv[i] = d1[i](t);
    if (!(v[i] > kEpsPos)) throw DomainError("v" + std::to_string(i + 1) + " is not positive at t = " + std::to_string(t));
  }
  return frame_from_values(v, dv);
}

std::array<ScalarFunction, 3> first_derivatives(const DiagonalMetric& m) {
  return {differentiate(m.v[0]), differentiate(m.v[1]), differentiate(m.v[2])};
}

using Gamma = double[4][4][4];

double norm_nabla_R(const Gamma& G, const Tensor4& r, const Tensor4& dr) {
  double sum = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          for (int e = 0; e < 4; ++e) {
            double x = a == 3 ? dr[tidx(b, c, d, e)] : 0.0;
            for (int f = 0; f < 4; ++f)
              x -= G[a][b][f] * r[tidx(f, c, d, e)] + G[a][c][f] * r[tidx(b, f, d, e)] +
                   G[a][d][f] * r[tidx(b, c, f, e)] + G[a][e][f] * r[tidx(b, c, d, f)];
            sum += x * x;
          }
  return std::sqrt(sum);
}

// Ricci is diagonal in both frames used here.
double norm_nabla_ric(const Gamma& G, const std::array<double, 4>& rho, const std::array<double, 4>& drho) {
  double sum = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double x = (a == 3 && b == c) ? drho[b] : 0.0;
        x -= G[a][b][c] * rho[c] + G[a][c][b] * rho[b];
        sum += x * x;
      }
  return std::sqrt(sum);
}

std::array<double, 4> ricci_of_tensor(const Tensor4& r) {
  std::array<double, 4> out{};
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a) out[b] += r[tidx(a, b, a, b)];
  return out;
}

}  // namespace

ChristoffelFrame christoffels(const DiagonalMetric& m, double t) { return frame_at(m, first_derivatives(m), t); }

Tensor4 tensor_from_connection(const DiagonalMetric& m, double t, double h) {
  const auto d1 = first_derivatives(m);
  const ChristoffelFrame f = frame_at(m, d1, t);
  auto dgamma = [&](double step, int a, int b, int c, const ChristoffelFrame& p, const ChristoffelFrame& q) {
    return (p.gamma[a][b][c] - q.gamma[a][b][c]) / (2 * step);
  };
  // central differences at h, h/2, h/4, two Richardson steps: error O(h^6)
  ChristoffelFrame plus[3], minus[3];
  for (int k = 0; k < 3; ++k) {
    plus[k] = frame_at(m, d1, t + h / (1 << k));
    minus[k] = frame_at(m, d1, t - h / (1 << k));
  }
  double dG[4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double d[3];
        for (int k = 0; k < 3; ++k) d[k] = dgamma(h / (1 << k), a, b, c, plus[k], minus[k]);
        const double r0 = (4.0 * d[1] - d[0]) / 3.0, r1 = (4.0 * d[2] - d[1]) / 3.0;
        dG[a][b][c] = (16.0 * r1 - r0) / 15.0;
      }

  const auto& G = f.gamma;
  const auto& C = f.bracket;
  // std(a,b,c,d) = <nabla_a nabla_b E_c - nabla_b nabla_a E_c - nabla_[a,b] E_c, E_d>
  Tensor4 r{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double x = 0.0;
          if (a == 3) x += dG[b][c][d];
          if (b == 3) x -= dG[a][c][d];
          for (int e = 0; e < 4; ++e) {
            x += G[b][c][e] * G[a][e][d] - G[a][c][e] * G[b][e][d];
            x -= C[a][b][e] * G[e][c][d];
          }
          // R(a,b,c,d) = <R(E_a,E_b)E_d, E_c>
          r[tidx(a, b, d, c)] = x;
        }
  return r;
}

CurvatureData curvature_from_connection(const DiagonalMetric& m, double t, double h) {
  return from_tensor(tensor_from_connection(m, t, h));
}

namespace {

std::pair<CurvatureData, CurvatureData> value_and_rate(const DiagonalMetric& m, double t) {
  const auto s = component_series(m, t, 2);
  CurvatureData c, dc;
  for (int i = 0; i < 9; ++i) {
    c[i] = s[i][0];
    dc[i] = s[i][1];
  }
  return {c, dc};
}

}  // namespace

double nabla_R_norm(const DiagonalMetric& m, double t) {
  const auto f = christoffels(m, t);
  const auto [c, dc] = value_and_rate(m, t);
  return norm_nabla_R(f.gamma, full_tensor(c), full_tensor(dc));
}

double nabla_ricci_norm(const DiagonalMetric& m, double t) {
  const auto f = christoffels(m, t);
  const auto [c, dc] = value_and_rate(m, t);
  return norm_nabla_ric(f.gamma, ricci(c), ricci(dc));
}

namespace {

struct ProductFrame {
  double gamma[4][4][4] = {};
  Tensor4 r{}, dr{};
};

void put_sec(Tensor4& r, int a, int b, double x) {
  r[tidx(a, b, a, b)] = x;
  r[tidx(b, a, b, a)] = x;
  r[tidx(a, b, b, a)] = -x;
  r[tidx(b, a, a, b)] = -x;
}

ProductFrame product_frame(const ProductMetric& m, double t) {
  ProductFrame pf;
  const double f = m.f(t), g = m.g(t);
  if (!(f > kEpsPos) || !(g > kEpsPos)) throw DomainError("product metric function not positive at t = " + std::to_string(t));
  const double lf = differentiate(m.f)(t) / f, lg = differentiate(m.g)(t) / g;
  for (int i = 0; i < 2; ++i) {
    pf.gamma[i][3][i] = lf;
    pf.gamma[i][i][3] = -lf;
  }
  pf.gamma[2][3][2] = lg;
  pf.gamma[2][2][3] = -lg;
  const auto s = product_series(m, t, 2);
  for (int k = 0; k < 2; ++k) {
    Tensor4& r = k == 0 ? pf.r : pf.dr;
    put_sec(r, 0, 1, s[0][k]);
    put_sec(r, 0, 2, s[1][k]);
    put_sec(r, 1, 2, s[1][k]);
    put_sec(r, 0, 3, s[2][k]);
    put_sec(r, 1, 3, s[2][k]);
    put_sec(r, 2, 3, s[3][k]);
  }
  return pf;
}

}  // namespace

double nabla_R_norm(const ProductMetric& m, double t) {
  const auto pf = product_frame(m, t);
  return norm_nabla_R(pf.gamma, pf.r, pf.dr);
}

double nabla_ricci_norm(const ProductMetric& m, double t) {
  const auto pf = product_frame(m, t);
  return norm_nabla_ric(pf.gamma, ricci_of_tensor(pf.r), ricci_of_tensor(pf.dr));
}

}  // namespace cohom
