#include "cohom/smoothness/smoothness.hpp"

#include <algorithm>
#include <cmath>

#include "cohom/analytic/taylor_series.hpp"
#include "cohom/errors.hpp"

namespace cohom {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "SMOOTH";
    case Verdict::Orbifold: return "ORBIFOLD";
    case Verdict::NotSmooth: return "NOT_SMOOTH";
  }
  return "?";
}

std::string to_string(End e) { return e == End::Lower ? "lower" : "upper"; }

std::vector<ConditionResult> SmoothnessReport::failures() const {
  std::vector<ConditionResult> out;
  for (const auto& c : conditions)
    if (!c.pass) out.push_back(c);
  return out;
}

namespace {

constexpr double kIntTol = 1e-9;

ScalarFunction at_end(const ScalarFunction& f, const Interval& dom, End end) {
  return end == End::Lower ? compose_affine(f, 1.0, dom.lo) : compose_affine(f, -1.0, dom.hi);
}

void add(std::vector<ConditionResult>& out, std::string id, double measured, double threshold = kCoeffTol) {
  out.push_back({std::move(id), measured, threshold, measured <= threshold});
}

// s = t^q phi(t^2): every coefficient below q or of the wrong parity vanishes.
// A non-integer q leaves only s = 0.
void pattern(const TaylorSeries& s, double q, const std::string& id, std::vector<ConditionResult>& out) {
  const bool integral = std::abs(q - std::round(q)) < kIntTol;
  double worst = 0.0;
  for (int k = 0; k <= s.order(); ++k) {
    const bool allowed = integral && k >= std::lround(q) && (k - std::lround(q)) % 2 == 0;
    if (!allowed) worst = std::max(worst, std::abs(s[k]));
  }
  if (!integral && worst > kCoeffTol) {
    out.push_back({id + ".not-applicable", worst, kCoeffTol, false});
    return;
  }
  add(out, id, worst);
}

std::optional<int> integer_at_least_two(double x) {
  const double r = std::round(x);
  if (r >= 2 && std::abs(x - r) <= kIntTol) return static_cast<int>(r);
  return std::nullopt;
}

// Decide the verdict once every condition except the collapse speed is known.
void decide(SmoothnessReport& rep, double speed, double expected, const std::string& speed_id) {
  bool rest_ok = true;
  for (const auto& c : rep.conditions) rest_ok = rest_ok && c.pass;
  const double rho = speed / expected;
  rep.speed_ratio = rho;
  add(rep.conditions, speed_id, std::abs(speed - expected), kIntTol);
  if (!rest_ok) {
    rep.verdict = Verdict::NotSmooth;
    return;
  }
  if (std::abs(rho - 1.0) <= kIntTol) {
    rep.verdict = Verdict::Smooth;
    return;
  }
  auto n = integer_at_least_two(rho);
  if (!n && rho > 0) n = integer_at_least_two(1.0 / rho);
  // an integer speed other than the expected one also closes up as an orbifold
  if (!n) n = integer_at_least_two(speed);
  if (n) {
    rep.verdict = Verdict::Orbifold;
    rep.orbifold_order = *n;
  } else {
    rep.verdict = Verdict::NotSmooth;
  }
}

SmoothnessReport codim2_core(const TaylorSeries& f1, const TaylorSeries& f2, const TaylorSeries& f3,
                             const std::optional<std::array<TaylorSeries, 3>>& off, int a) {
  SmoothnessReport rep;
  pattern(f1, 2.0, "f1.parity", rep.conditions);
  pattern(f2 + f3, 0.0, "f2+f3.even", rep.conditions);
  pattern(f2 - f3, 4.0 / a, "f2-f3.order", rep.conditions);
  if (off) {
    pattern((*off)[0], 2.0 + 2.0 / a, "d12.order", rep.conditions);
    pattern((*off)[1], 2.0 + 2.0 / a, "d13.order", rep.conditions);
    pattern((*off)[2], 4.0 / a, "d23.order", rep.conditions);
  }
  const double lead = f1.order() >= 2 ? f1[2] : 0.0;
  const double speed = lead > 0 ? std::sqrt(lead) : 0.0;
  decide(rep, speed, a, "f1.leading");
  return rep;
}

}  // namespace

SmoothnessReport check_smooth_codim2(const DiagonalMetric& m, const GroupDiagram& d, int order, End end) {
  if (d.codim != 2) throw ConfigError("codimension-two check called with codimension " + std::to_string(d.codim));
  std::array<ScalarFunction, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = at_end(m.v[i], m.domain, end);
  std::vector<int> zero;
  for (int i = 0; i < 3; ++i)
    if (std::abs(v[i](0.0)) <= kCoeffTol) zero.push_back(i);
  if (zero.size() != 1)
    throw ConfigError("codimension-two collapse needs exactly one vanishing function, found " +
                      std::to_string(zero.size()));
  std::array<int, 3> order_idx{zero[0], 0, 0};
  int n = 1;
  for (int i = 0; i < 3; ++i)
    if (i != zero[0]) order_idx[n++] = i;
  std::array<TaylorSeries, 3> f;
  for (int i = 0; i < 3; ++i) {
    const auto s = taylor_at(v[order_idx[i]], 0.0, order);
    f[i] = s * s;
  }
  return codim2_core(f[0], f[1], f[2], std::nullopt, d.slice_speed_a);
}

SmoothnessReport check_smooth_full(const FullMetricEndo& p, const GroupDiagram& d, int order) {
  if (d.codim != 2 && d.codim != 4) throw ConfigError("unsupported codimension " + std::to_string(d.codim));
  const double t0 = p.domain.lo;
  auto s = [&](const ScalarFunction& f) { return taylor_at(f, t0, order); };
  if (d.codim == 2)
    return codim2_core(s(p.f1), s(p.f2), s(p.f3), std::array{s(p.d12), s(p.d13), s(p.d23)}, d.slice_speed_a);
  SmoothnessReport rep;
  const std::array<const ScalarFunction*, 3> fs{&p.f1, &p.f2, &p.f3};
  for (int i = 0; i < 3; ++i) {
    const auto si = s(*fs[i]);
    pattern(si, 2.0, "f" + std::to_string(i + 1) + ".parity", rep.conditions);
    add(rep.conditions, "f" + std::to_string(i + 1) + ".leading", std::abs(si[2] - 1.0));
  }
  pattern(s(p.d12), 4.0, "d12.order", rep.conditions);
  pattern(s(p.d13), 4.0, "d13.order", rep.conditions);
  pattern(s(p.d23), 4.0, "d23.order", rep.conditions);
  const auto fails = rep.failures();
  rep.verdict = fails.empty() ? Verdict::Smooth : Verdict::NotSmooth;
  return rep;
}

SmoothnessReport check_smooth_codim4(const DiagonalMetric& m, int order, End end) {
  SmoothnessReport rep;
  for (int i = 0; i < 3; ++i) {
    const auto s = taylor_at(at_end(m.v[i], m.domain, end), 0.0, order);
    if (std::abs(s[0]) > kCoeffTol)
      throw ConfigError("codimension four needs every v_i to vanish at the " + to_string(end) + " end; v" +
                        std::to_string(i + 1) + " does not");
    const auto f = s * s;
    const std::string id = "f" + std::to_string(i + 1);
    pattern(f, 2.0, id + ".parity", rep.conditions);
    add(rep.conditions, id + ".leading", std::abs(f[2] - 1.0));
  }
  rep.verdict = rep.failures().empty() ? Verdict::Smooth : Verdict::NotSmooth;
  return rep;
}

SmoothnessReport check_smooth_product(const ProductMetric& m, End end, int order) {
  const auto f = taylor_at(at_end(m.f, m.domain, end), 0.0, order);
  const auto g = taylor_at(at_end(m.g, m.domain, end), 0.0, order);
  SmoothnessReport rep;
  if (std::abs(g[0]) <= kCoeffTol) {
    // circle collapse: g odd, f even and positive; speed 1 is smooth
    pattern(g, 1.0, "g.odd", rep.conditions);
    pattern(f, 0.0, "f.even", rep.conditions);
    add(rep.conditions, "f.positive", f[0] > kCoeffTol ? 0.0 : 1.0, 0.0);
    decide(rep, g[1], 1.0, "g.leading");
    return rep;
  }
  if (std::abs(f[0]) <= kCoeffTol) {
    pattern(f, 1.0, "f.odd", rep.conditions);
    add(rep.conditions, "f.leading", std::abs(f[1] - 1.0));
    pattern(g, 0.0, "g.even", rep.conditions);
    add(rep.conditions, "g.positive", g[0] > kCoeffTol ? 0.0 : 1.0, 0.0);
    rep.verdict = rep.failures().empty() ? Verdict::Smooth : Verdict::NotSmooth;
    return rep;
  }
  throw ConfigError("neither f nor g vanishes at the " + to_string(end) + " end");
}

SmoothnessReport check_smooth(const AnyMetric& m, const GroupDiagram& d, End end, int order) {
  if (const auto* pm = std::get_if<ProductMetric>(&m)) return check_smooth_product(*pm, end, order);
  const auto& dm = std::get<DiagonalMetric>(m);
  if (d.codim == 4) return check_smooth_codim4(dm, order, end);
  return check_smooth_codim2(dm, d, order, end);
}

SmoothnessReport check_smooth_entry(const CatalogEntry& e, End end, int order) {
  if (end == End::Upper && !e.upper) throw ConfigError(e.id + " has no upper singular orbit");
  return check_smooth(e.metric, end == End::Lower ? e.lower : *e.upper, end, order);
}

}  // namespace cohom
