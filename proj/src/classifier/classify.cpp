#include "cohom/classifier/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cohom/errors.hpp"
#include "cohom/smoothness/smoothness.hpp"

namespace cohom {

namespace {

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
double inf_norm(const Vec<N>& a) {
  double m = 0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

struct Fit {
  bool ok = false;
  double s = 1.0;
  double residual = 0.0;
};

// c ~ s * e with s > 0
template <std::size_t N>
Fit fit_scale(const Vec<N>& c, const Vec<N>& e, double tol) {
  Fit f;
  double ce = 0, ee = 0;
  for (std::size_t i = 0; i < N; ++i) {
    ce += c[i] * e[i];
    ee += e[i] * e[i];
  }
  const double nc = inf_norm(c);
  if (ee == 0.0 || inf_norm(e) < 1e-12) {
    f.ok = nc < 1e-12;  // flat matches flat
    f.residual = nc;
    return f;
  }
  f.s = ce / ee;
  if (!(f.s > 0)) return f;
  Vec<N> d;
  for (std::size_t i = 0; i < N; ++i) d[i] = c[i] - f.s * e[i];
  f.residual = inf_norm(d) / std::max(nc, 1e-300);
  f.ok = f.residual <= tol;
  return f;
}

Vec<9> components_at_mid(const DiagonalMetric& m) {
  const Interval w = sampling_window(m, 0.05);
  const auto c = curvature_components(m, 0.5 * (w.lo + w.hi));
  Vec<9> out;
  for (int i = 0; i < 9; ++i) out[i] = c[i];
  return out;
}

Vec<4> product_at_mid(const ProductMetric& m) {
  const auto c = curvature_components_product(m, 0.5 * (m.domain.lo + m.domain.hi));
  return {c.sec12, c.secT, c.sec4, c.secT4};
}

const std::vector<std::array<int, 3>>& permutations() {
  static const std::vector<std::array<int, 3>> p = [] {
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> q{0, 1, 2};
    do out.push_back(q);
    while (std::next_permutation(q.begin(), q.end()));
    return out;
  }();
  return p;
}

void flag_smoothness(Classification& c, const AnyMetric& m, const GroupDiagram& d) {
  try {
    const auto rep = check_smooth(m, d, End::Lower);
    c.smoothness = to_string(rep.verdict);
    c.orbifold_order = rep.orbifold_order;
  } catch (const Error& e) {
    c.smoothness = std::string("unchecked: ") + e.what();
  }
}

Classification classify_diagonal(const DiagonalMetric& m, const Vec<9>& c, Classification base, double tol) {
  struct Candidate {
    bool exact;
    std::array<int, 3> perm;
    std::size_t index;
    Fit fit;
  };
  std::vector<Candidate> hits;
  const auto& cat = catalog();
  for (std::size_t k = 0; k < cat.size(); ++k) {
    if (!cat[k].diagonal()) continue;
    const auto& ref = std::get<DiagonalMetric>(cat[k].metric);
    for (const auto& p : permutations()) {
      const DiagonalMetric q = permute(ref, p);
      const Fit f = fit_scale(c, components_at_mid(q), tol);
      if (f.ok) hits.push_back({q.v == m.v, p, k, f});
    }
  }
  if (!hits.empty()) {
    // exact function match first, then the smallest permutation, then catalog order
    const auto best = std::min_element(hits.begin(), hits.end(), [](const Candidate& a, const Candidate& b) {
      if (a.exact != b.exact) return a.exact;
      if (a.perm != b.perm) return a.perm < b.perm;
      return a.index < b.index;
    });
    base.kind = ClassKind::Match;
    base.id = cat[best->index].id;
    base.permutation = best->perm;
    base.exact = best->exact;
    base.lambda = best->exact ? 1.0 : 1.0 / std::sqrt(best->fit.s);
    base.match_residual = best->fit.residual;
    return base;
  }

  // (b sin t, b cos t, b): radial (1,1,0) for every b, k12 = 1 - 4/b^2
  for (const auto& p : permutations()) {
    // reference slot r sits at input slot inv[r]
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[p[i]] = i;
    const double s = 0.5 * (c[6 + inv[0]] + c[6 + inv[1]]);
    if (!(s > 0)) continue;
    const int lo = std::min(inv[0], inv[1]), hi = std::max(inv[0], inv[1]);
    const int pair = lo == 0 ? (hi == 1 ? 0 : 1) : 2;
    const double ratio = c[pair] / s;
    if (!(ratio < 1)) continue;
    const double b = 2.0 / std::sqrt(1.0 - ratio);
    const Fit f = fit_scale(c, components_at_mid(permute(example5_family(b), p)), tol);
    if (!f.ok) continue;
    base.kind = ClassKind::Match;
    base.id = "ex5-family";
    base.permutation = p;
    base.family_parameter = b;
    base.lambda = 0.5 * b / std::sqrt(f.s);
    base.match_residual = f.residual;
    base.note = "homothetic to (b sin t, b cos t, b); lambda reported as b/2 relative to the b = 2 member";
    flag_smoothness(base, m, catalog_get("ex5").lower);
    return base;
  }
  base.kind = ClassKind::UnknownCH;
  return base;
}

Classification classify_product(const ProductMetric& m, const Vec<4>& c, Classification base, double tol) {
  const auto& cat = catalog();
  std::size_t best = cat.size();
  Fit best_fit;
  for (std::size_t k = 0; k < cat.size() && best == cat.size(); ++k) {
    if (cat[k].diagonal()) continue;
    const auto& ref = std::get<ProductMetric>(cat[k].metric);
    if (ref.f == m.f && ref.g == m.g) {
      best = k;
      base.exact = true;
    }
  }
  for (std::size_t k = 0; k < cat.size() && best == cat.size(); ++k) {
    if (cat[k].diagonal()) continue;
    const Fit f = fit_scale(c, product_at_mid(std::get<ProductMetric>(cat[k].metric)), tol);
    if (f.ok) {
      best = k;
      best_fit = f;
    }
  }
  if (best != cat.size()) {
    base.kind = ClassKind::Match;
    base.id = cat[best].id;
    base.lambda = base.exact ? 1.0 : 1.0 / std::sqrt(best_fit.s);
    base.match_residual = best_fit.residual;
    return base;
  }
  // f = a, g = sin t / sinh t / t: (1/a^2, 0, 0, sign)
  const double scale = std::max(1.0, inf_norm(c));
  if (std::abs(c[1]) <= tol * scale && std::abs(c[2]) <= tol * scale && c[0] > 0) {
    const int sign = std::abs(c[3]) <= tol * scale ? 0 : (c[3] > 0 ? 1 : -1);
    const double lambda = sign == 0 ? 1.0 : 1.0 / std::sqrt(std::abs(c[3]));
    const double a = 1.0 / (lambda * std::sqrt(c[0]));
    base.kind = ClassKind::Match;
    base.id = "ex10-family";
    base.lambda = lambda;
    base.family_parameter = a;
    base.note = sign > 0 ? "circle factor S2" : sign < 0 ? "circle factor H2" : "circle factor R2";
    return base;
  }
  base.kind = ClassKind::UnknownCH;
  return base;
}

}  // namespace

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Match: return "MATCH";
    case ClassKind::UnknownCH: return "UNKNOWN_CH";
    case ClassKind::NotCH: return "NOT_CH";
  }
  return "?";
}

Classification classify_metric(const AnyMetric& m, const ClassifyOptions& opt) {
  Classification out;
  CHResult ch;
  try {
    ch = std::visit([&](const auto& x) { return is_curvature_homogeneous(x, opt.ch); }, m);
  } catch (const DomainError& e) {
    out.kind = ClassKind::NotCH;
    out.ch_deviation = std::numeric_limits<double>::infinity();
    out.note = e.what();
    return out;
  }
  out.ch_deviation = ch.max_deviation;
  if (!ch.verdict) {
    out.kind = ClassKind::NotCH;
    return out;
  }
  if (const auto* d = std::get_if<DiagonalMetric>(&m)) {
    Vec<9> c;
    std::copy(ch.mean.begin(), ch.mean.end(), c.begin());
    return classify_diagonal(*d, c, out, opt.match_tol);
  }
  const Vec<4> c{ch.mean[0], ch.mean[1], ch.mean[2], ch.mean[3]};
  return classify_product(std::get<ProductMetric>(m), c, out, opt.match_tol);
}

}  // namespace cohom
