#include "cohom/curvature/connection_tensor.hpp"

#include <Eigen/QR>

namespace cohom {

double ConnectionTensorA::entry(int i, int m) const {
  if (i == m) return 0.0;
  const int lo = std::min(i, m), hi = std::max(i, m);
  for (int p = 0; p < 6; ++p)
    if (kSkewPairs[p][0] == lo && kSkewPairs[p][1] == hi) return i < m ? a[p] : -a[p];
  return 0.0;
}

namespace {

// Index combinations (ij) <= (kl) of 2-forms, less the one fixed by the first Bianchi identity.
std::array<std::array<int, 4>, 20> equation_indices() {
  std::array<std::array<int, 4>, 20> out{};
  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int n = 0;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      if (p == 2 && q == 3) continue;  // R(E1,E4,E2,E3) is fixed by the other two all-distinct ones
      out[n++] = {pairs[p][0], pairs[p][1], pairs[q][0], pairs[q][1]};
    }
  return out;
}

}  // namespace

void assemble_connection_system(const Tensor4& r, const Tensor4& dr, Eigen::Matrix<double, 20, 6>& lhs,
                                Eigen::Matrix<double, 20, 1>& rhs) {
  static const auto eqs = equation_indices();
  lhs.setZero();
  for (int e = 0; e < 20; ++e) {
    const auto& idx = eqs[e];
    rhs(e) = dr[tidx(idx[0], idx[1], idx[2], idx[3])];
    for (int u = 0; u < 6; ++u) {
      const int p = kSkewPairs[u][0], q = kSkewPairs[u][1];
      double coef = 0.0;
      for (int slot = 0; slot < 4; ++slot) {
        // a_p^q = x, a_q^p = -x: replace E_p by E_q (sign +) or E_q by E_p (sign -) in this slot
        auto with = [&](int repl) {
          auto j = idx;
          j[slot] = repl;
          return r[tidx(j[0], j[1], j[2], j[3])];
        };
        if (idx[slot] == p) coef += with(q);
        if (idx[slot] == q) coef -= with(p);
      }
      lhs(e, u) = coef;
    }
  }
}

ConnectionTensorA solve_connection_A(const DiagonalMetric& m, double t, const CurvatureOptions& opt) {
  const auto series = component_series(m, t, 2, opt);
  CurvatureData c, dc;
  for (int i = 0; i < 9; ++i) {
    c[i] = series[i][0];
    dc[i] = series[i][1];
  }
  Eigen::Matrix<double, 20, 6> lhs;
  Eigen::Matrix<double, 20, 1> rhs;
  assemble_connection_system(full_tensor(c), full_tensor(dc), lhs, rhs);
  const Eigen::Matrix<double, 6, 1> x = lhs.completeOrthogonalDecomposition().solve(rhs);
  ConnectionTensorA out;
  for (int u = 0; u < 6; ++u) out.a[u] = x(u);
  out.residual = (lhs * x - rhs).norm();
  out.residual_at_zero = rhs.norm();
  return out;
}

}  // namespace cohom
