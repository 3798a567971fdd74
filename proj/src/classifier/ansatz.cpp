#include "cohom/classifier/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cohom/curvature/curvature.hpp"
#include "cohom/errors.hpp"
#include "cohom/metrics/catalog.hpp"

namespace cohom {

namespace {

using SF = ScalarFunction;
constexpr double kPi = std::numbers::pi;

// first positive zero of b1 cos(ct) - b2 sin(ct), b1, b2 >= 0
double trig_cut(double b1, double b2, double c) {
  if (c <= 0) return kPi;
  return std::atan2(b1, b2) / c;
}

// first positive zero of b1 cosh(ct) - b2 sinh(ct)
double hyp_cut(double b1, double b2, double c) {
  if (c <= 0 || b2 <= b1) return kNoncompactWindow;
  return std::atanh(b1 / b2) / c;
}

DiagonalMetric make(SF v1, SF v2, SF v3, double hi) {
  DiagonalMetric m;
  m.v = {std::move(v1), std::move(v2), std::move(v3)};
  for (int i = 0; i < 3; ++i)
    if (m.v[i].is_zero()) throw DegenerateAnsatz("v" + std::to_string(i + 1) + " vanishes identically");
  m.domain = {0.0, hi};
  return m;
}

void nonzero(double x, const char* name) {
  if (x == 0.0) throw DegenerateAnsatz(std::string("parameter ") + name + " = 0 makes the ansatz degenerate");
}

std::vector<AnsatzFamily> build_all() {
  std::vector<AnsatzFamily> out;
  for (const auto& s : constraint_systems()) out.push_back({s.id, s.params});
  return out;
}

}  // namespace

DiagonalMetric AnsatzFamily::build(const std::vector<double>& x) const {
  if (x.size() != params.size())
    throw std::invalid_argument("ansatz " + id + " takes " + std::to_string(params.size()) + " parameters");
  const double w = kNoncompactWindow;
  if (id == "5.1-compact" || id == "5.1-hyperbolic" || id == "5.1-linear") {
    const double a = x[0], b = x[1], c = x[2];
    nonzero(a, "a");
    nonzero(b, "b");
    if (id == "5.1-compact")
      return make(SF::sin(a, 1), SF::cos(b, c), SF::cos(b, c), std::min(kPi, c > 0 ? kPi / (2 * c) : kPi));
    const SF v1 = id == "5.1-hyperbolic" ? SF::sinh(a, 1) : SF::monomial(a, 1);
    return make(v1, SF::cosh(b, c), SF::cosh(b, c), w);
  }
  if (id == "5.2.1" || id == "5.3.1" || id == "5.4.1") {
    const double b = x[0], c1 = x[1], c2 = x[2];
    nonzero(b, "b");
    if (id == "5.2.1") {
      double hi = kPi;
      for (double c : {c1, c2})
        if (c > 0) hi = std::min(hi, kPi / (2 * c));
      return make(SF::sin(2, 1), SF::cos(b, c1), SF::cos(b, c2), hi);
    }
    const SF v1 = id == "5.3.1" ? SF::monomial(2, 1) : SF::sinh(2, 1);
    return make(v1, SF::cosh(b, c1), SF::cosh(b, c2), w);
  }
  if (id == "5.2.2" || id == "5.3.2" || id == "5.4.2") {
    const double b1 = x[0], b2 = x[1], c = x[2];
    if (id == "5.2.2") {
      const SF v2 = SF::cos(b1, c) + SF::sin(b2, c), v3 = SF::cos(b1, c) - SF::sin(b2, c);
      return make(SF::sin(4, 1), v2, v3, std::min(kPi, trig_cut(std::abs(b1), std::abs(b2), c)));
    }
    const SF v1 = id == "5.3.2" ? SF::monomial(4, 1) : SF::sinh(4, 1);
    const SF v2 = SF::cosh(b1, c) + SF::sinh(b2, c), v3 = SF::cosh(b1, c) - SF::sinh(b2, c);
    return make(v1, v2, v3, std::min(w, hyp_cut(std::abs(b1), std::abs(b2), c)));
  }
  if (id == "codim4-trig") {
    double top = 0;
    for (int i = 0; i < 3; ++i) {
      nonzero(x[i], "b_i");
      top = std::max(top, std::abs(x[i]));
    }
    return make(SF::sin(1 / x[0], x[0]), SF::sin(1 / x[1], x[1]), SF::sin(1 / x[2], x[2]), kPi / top);
  }
  if (id == "codim4-mixed") {
    nonzero(x[0], "b1");
    nonzero(x[1], "b2");
    if (x[0] < 0 || x[1] < 0) throw DegenerateAnsatz("codim4-mixed needs b_i > 0");
    const double r1 = std::sqrt(x[0]), r2 = std::sqrt(x[1]);
    return make(SF::sinh(1 / r1, r1), SF::sinh(1 / r2, r2), SF::monomial(1, 1), w);
  }
  throw UnknownSystem("no ansatz for '" + id + "'");
}

const std::vector<AnsatzFamily>& ansatz_families() {
  static const std::vector<AnsatzFamily> all = build_all();
  return all;
}

const AnsatzFamily& get_ansatz(std::string_view id) {
  for (const auto& a : ansatz_families())
    if (a.id == id) return a;
  throw UnknownSystem("unknown ansatz '" + std::string(id) + "'");
}

double boundary_obstruction(const DiagonalMetric& m, int order) {
  const auto c = component_laurent(m, 0.0, order + 6);
  double worst = 0;
  for (int i = 0; i < 9; ++i)
    for (int k = -4; k <= order; ++k)
      if (k != 0) worst = std::max(worst, std::abs(c[i].at(k)));
  return worst;
}

}  // namespace cohom
