#include "cohom/cli/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cohom/classifier/classify.hpp"
#include "cohom/classifier/laurent_boundary.hpp"
#include "cohom/classifier/regular_sweep.hpp"
#include "cohom/classifier/root_finder.hpp"
#include "cohom/connection/connection.hpp"
#include "cohom/connection/product_oracle.hpp"
#include "cohom/errors.hpp"
#include "cohom/smoothness/smoothness.hpp"

namespace cohom {

namespace {

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

std::string point(const std::vector<double>& x) {
  std::ostringstream s;
  s.precision(6);
  s << '(';
  for (std::size_t i = 0; i < x.size(); ++i) s << (i ? ", " : "") << x[i];
  s << ')';
  return s.str();
}

std::vector<double> grid(Interval w, int n) {
  std::vector<double> t(n);
  for (int k = 0; k < n; ++k) t[k] = w.lo + w.length() * k / (n - 1);
  return t;
}

Interval window_of(const AnyMetric& m) {
  if (const auto* d = std::get_if<DiagonalMetric>(&m)) return sampling_window(*d, 0.05);
  const auto& p = std::get<ProductMetric>(m);
  const double len = p.domain.length();
  return {p.domain.lo + 0.05 * len, p.domain.hi - 0.05 * len};
}

// positive on [0, 1.5]: 2..3 plus bounded oscillation, growth and a quadratic term
DiagonalMetric random_metric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> base(2.0, 3.0), amp(-0.6, 0.6), rate(0.5, 2.0), quad(-0.2, 0.2);
  DiagonalMetric m;
  for (auto& v : m.v) {
    v = ScalarFunction::constant(base(rng)) + ScalarFunction::cos(amp(rng), rate(rng)) +
        ScalarFunction::sin(amp(rng), rate(rng)) + ScalarFunction::exp(0.1 * amp(rng), rate(rng)) +
        ScalarFunction::monomial(quad(rng), 2);
  }
  m.domain = {0.0, 1.5};
  return m;
}

double oracle_gap(const DiagonalMetric& m, const CurvatureOptions& opt, int n) {
  double worst = 0;
  for (double t : grid(sampling_window(m, 0.05), n)) {
    const auto a = curvature_components(m, t, opt);
    const auto b = curvature_from_connection(m, t);
    for (int i = 0; i < 9; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double product_oracle_gap(const ProductMetric& m, int n) {
  double worst = 0;
  for (double t : grid(window_of(m), n)) {
    const auto a = curvature_components_product(m, t);
    const auto b = product_curvature_from_coordinates(m, t);
    const double d[4] = {a.sec12 - b.sec12, a.secT - b.secT, a.sec4 - b.sec4, a.secT4 - b.secT4};
    for (double x : d) worst = std::max(worst, std::abs(x));
  }
  return worst;
}

double max_nabla_R(const AnyMetric& m, int n) {
  double worst = 0;
  for (double t : grid(window_of(m), n))
    worst = std::max(worst, std::visit([&](const auto& x) { return nabla_R_norm(x, t); }, m));
  return worst;
}

void ch_rows(std::vector<ReproRow>& rows) {
  CHOptions o;
  o.tol = 1e-9;
  for (const auto& e : catalog()) {
    const auto r = std::visit([&](const auto& m) { return is_curvature_homogeneous(m, o); }, e.metric);
    rows.push_back({"ch", e.id, r.verdict, "deviation " + fmt(r.max_deviation)});
  }
}

void smooth_rows(std::vector<ReproRow>& rows) {
  for (const auto& e : catalog()) {
    for (End end : {End::Lower, End::Upper}) {
      if (end == End::Upper && !e.upper) continue;
      const std::string id = e.id + "/" + to_string(end);
      try {
        const auto r = check_smooth_entry(e, end);
        std::string detail = to_string(r.verdict);
        for (const auto& f : r.failures()) detail += "; " + f.id + " = " + fmt(f.measured);
        rows.push_back({"smooth", id, r.verdict == Verdict::Smooth, detail});
        // speed 1% off must be detected
        CatalogEntry bent = e;
        bent.metric = perturb_collapse(e.metric, end == End::Upper, 1.01);
        const auto p = check_smooth_entry(bent, end);
        rows.push_back({"smooth", id + "/perturbed", p.verdict == Verdict::NotSmooth, to_string(p.verdict)});
      } catch (const Error& ex) {
        rows.push_back({"smooth", id, false, ex.what()});
      }
    }
  }

  // the two ends of ex2 are the ends of ex4 in the other order
  const auto& e2 = catalog_get("ex2");
  const auto& e4 = catalog_get("ex4");
  const DiagonalMetric r2 = reflect(std::get<DiagonalMetric>(e2.metric));
  const auto& m4 = std::get<DiagonalMetric>(e4.metric);
  double best = std::numeric_limits<double>::infinity();
  for (std::array<int, 3> p{0, 1, 2};;) {
    double gap = 0;
    for (double t : grid(m4.domain, 41))
      for (int i = 0; i < 3; ++i) gap = std::max(gap, std::abs(r2.v[i](t) - m4.v[p[i]](t)));
    best = std::min(best, gap);
    if (!std::next_permutation(p.begin(), p.end())) break;
  }
  const bool same_diagrams = e2.upper && *e2.upper == e4.lower && e4.upper && e2.lower == *e4.upper;
  rows.push_back({"smooth", "ex2-ex4-swap", best < 1e-12 && same_diagrams,
                  "function gap " + fmt(best) + (same_diagrams ? ", diagrams swapped" : ", diagrams differ")});

  const auto r5 = check_smooth(AnyMetric(example5_family(3.0)), catalog_get("ex5").lower, End::Lower);
  rows.push_back({"smooth", "ex5-b3", r5.verdict == Verdict::Orbifold,
                  to_string(r5.verdict) + (r5.orbifold_order ? " order " + std::to_string(*r5.orbifold_order) : "")});
}

void root_rows(std::vector<ReproRow>& rows, const ReproduceOptions& opt) {
  for (const auto& s : constraint_systems()) {
    double worst = 0;
    for (const auto& k : s.known_roots) worst = std::max(worst, max_residual(s, k.x));
    if (!s.known_roots.empty())
      rows.push_back({"roots", s.id + "/exact", worst <= 1e-12, "max residual " + fmt(worst)});

    RootFinderOptions ro;
    if (opt.box_system && *opt.box_system == s.id) ro.box = opt.box;
    const auto rep = find_roots(s, ro);
    std::string detail;
    if (s.family)
      detail = std::to_string(rep.families.size()) + " families";
    else
      detail = std::to_string(rep.roots.size()) + " roots";
    for (const auto& m : rep.missing) detail += "; missing " + m;
    for (const auto& x : rep.extra) detail += "; extra " + point(x);
    rows.push_back({"roots", s.id + "/set", rep.matches_known(), detail});
  }
}

void oracle_rows(std::vector<ReproRow>& rows, const ReproduceOptions& opt) {
  double worst = 0;
  std::string where;
  for (const auto& e : catalog()) {
    const double g = e.diagonal() ? oracle_gap(std::get<DiagonalMetric>(e.metric), opt.curvature, 50)
                                  : product_oracle_gap(std::get<ProductMetric>(e.metric), 50);
    if (g > worst) {
      worst = g;
      where = e.id;
    }
  }
  rows.push_back({"oracle", "catalog", worst < 1e-8, "sup difference " + fmt(worst) + (where.empty() ? "" : " at " + where)});

  std::mt19937_64 rng(opt.seed);
  worst = 0;
  for (int k = 0; k < 20; ++k) worst = std::max(worst, oracle_gap(random_metric(rng), opt.curvature, 50));
  rows.push_back({"oracle", "random", worst < 1e-8, "sup difference " + fmt(worst)});
}

void discriminator_rows(std::vector<ReproRow>& rows) {
  const auto& ts = catalog_get("tsukada");
  const auto& m = std::get<DiagonalMetric>(ts.metric);
  const auto c = curvature_components(m, 0.7);
  const bool values = std::abs(c.kappa[0] + 1) < 1e-9 && std::abs(c.kappa[1] + 1) < 1e-9 &&
                      std::abs(c.kappa[2] - 3) < 1e-9 && std::abs(c.radial[0] + 1) < 1e-9 &&
                      std::abs(c.radial[1] + 1) < 1e-9 && std::abs(c.radial[2] + 1) < 1e-9;
  rows.push_back({"discriminator", "tsukada/components", values,
                  "k23 - k12 = " + fmt(c.kappa[2] - c.kappa[0])});
  auto ric = ricci(c);
  std::sort(ric.begin(), ric.end());
  const bool ric_ok = std::abs(ric[0] + 3) < 1e-9 && std::abs(ric[1] + 3) < 1e-9 && std::abs(ric[2] - 1) < 1e-9 &&
                      std::abs(ric[3] - 1) < 1e-9;
  rows.push_back({"discriminator", "tsukada/ricci", ric_ok,
                  "eigenvalues " + point({ric[0], ric[1], ric[2], ric[3]}) + ", not Einstein"});
  const double nr = nabla_R_norm(m, 0.7);
  rows.push_back({"discriminator", "tsukada/nabla-R", nr > 1e-2, "|nabla R| = " + fmt(nr)});
  const double a = nabla_ricci_norm(m, 0.3), b = nabla_ricci_norm(m, 1.5);
  const double rel = std::abs(a - b) / std::max(a, b);
  rows.push_back({"discriminator", "tsukada/nabla-ric", rel > 0.1,
                  "|nabla Ric| " + fmt(a) + " vs " + fmt(b) + ", relative change " + fmt(rel)});
  for (const auto& e : catalog()) {
    if (e.id == "tsukada") continue;
    const double n = max_nabla_R(e.metric, 20);
    rows.push_back({"discriminator", e.id + "/nabla-R", n < 1e-8, "|nabla R| <= " + fmt(n)});
  }
  for (const auto& e : catalog()) {
    const auto cl = classify_metric(e.metric);
    const bool ok = cl.kind == ClassKind::Match && cl.id == e.id && std::abs(cl.lambda - 1) < 1e-9;
    rows.push_back({"classify", e.id, ok, to_string(cl.kind) + " " + cl.id + " lambda " + fmt(cl.lambda)});
  }
}

void laurent_rows(std::vector<ReproRow>& rows, const ReproduceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_real_distribution<double> u(0.2, 1.5);
  double worst = 0, worst_zero = 0;
  for (int k = 0; k < 20; ++k) {
    MixedBoundaryParams p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const auto prof = laurent_boundary(mixed_boundary_family(p), 2, 0.0);
    const double want = mixed_boundary_leading(p);
    worst = std::max(worst, std::abs(prof.at(-2) - want));
    p.b2 = p.a3 + p.b3;
    worst_zero = std::max(worst_zero, std::abs(laurent_boundary(mixed_boundary_family(p), 2, 0.0).at(-2)));
  }
  rows.push_back({"laurent", "leading-k23", worst < 1e-8, "max gap " + fmt(worst)});
  rows.push_back({"laurent", "leading-k23-vanishes", worst_zero < 1e-8, "max |coefficient| " + fmt(worst_zero)});
}

}  // namespace

AnyMetric perturb_collapse(const AnyMetric& m, bool upper, double factor) {
  if (const auto* d = std::get_if<DiagonalMetric>(&m)) {
    DiagonalMetric out = *d;
    const double t0 = upper ? d->domain.hi : d->domain.lo;
    for (auto& v : out.v)
      if (std::abs(v(t0)) <= kEpsPos) v = factor * v;
    return out;
  }
  ProductMetric out = std::get<ProductMetric>(m);
  const double t0 = upper ? out.domain.hi : out.domain.lo;
  if (std::abs(out.f(t0)) <= kEpsPos) out.f = factor * out.f;
  if (std::abs(out.g(t0)) <= kEpsPos) out.g = factor * out.g;
  return out;
}

std::vector<ReproRow> reproduce(const ReproduceOptions& opt) {
  std::vector<ReproRow> rows;
  ch_rows(rows);
  smooth_rows(rows);
  root_rows(rows, opt);
  oracle_rows(rows, opt);
  discriminator_rows(rows);
  SweepOptions so;
  so.seed = opt.seed;
  so.draws = opt.sweep_draws;
  const auto sw = regular_orbit_sweep(so);
  double closest = std::numeric_limits<double>::infinity();
  for (const auto& s : sw.strata) closest = std::min(closest, s.min_deviation);
  rows.push_back({"sweep", "regular-orbits", sw.ch == 0,
                  std::to_string(sw.ch) + " of " + std::to_string(sw.draws) + " draws constant; smallest deviation " +
                      fmt(closest) + "; seed " + std::to_string(sw.seed)});
  laurent_rows(rows, opt);
  return rows;
}

nlohmann::json to_json(const std::vector<ReproRow>& rows) {
  nlohmann::json table = nlohmann::json::array();
  int failed = 0;
  for (const auto& r : rows) {
    table.push_back({{"group", r.group}, {"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) ++failed;
  }
  return {{"rows", table}, {"failed", failed}, {"total", rows.size()}};
}

}  // namespace cohom
