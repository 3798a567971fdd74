#include "cohom/cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "cohom/classifier/classify.hpp"
#include "cohom/classifier/root_finder.hpp"
#include "cohom/cli/reproduce.hpp"
#include "cohom/connection/connection.hpp"
#include "cohom/curvature/connection_tensor.hpp"
#include "cohom/errors.hpp"
#include "cohom/io/config.hpp"
#include "cohom/io/report.hpp"
#include "cohom/smoothness/smoothness.hpp"

namespace cohom {

using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

// What a command operates on: a catalog entry (possibly rescaled) or a config document.
struct Input {
  std::string label;
  std::optional<CatalogEntry> entry;
  std::optional<MetricConfig> config;

  AnyMetric metric() const {
    if (entry) return entry->metric;
    if (const auto* d = std::get_if<DiagonalMetric>(&config->metric)) return *d;
    if (const auto* p = std::get_if<ProductMetric>(&config->metric)) return *p;
    throw UsageError("this command needs a diagonal or product metric, not kind 'full'");
  }
};

// --scale: the family parameter for the parameterized entries, a homothety otherwise
CatalogEntry scaled_entry(CatalogEntry e, double s) {
  if (e.id == "ex5") {
    e.metric = example5_family(s);
  } else if (e.id == "ex9") {
    e.metric = example9_family(s);
  } else if (e.id.rfind("ex10", 0) == 0) {
    const int sign = e.id == "ex10-compact" ? 1 : e.id == "ex10-flat" ? 0 : -1;
    const auto& p = std::get<ProductMetric>(e.metric);
    ProductMetric m = example10_family(sign, 1.0, s);
    m.domain = p.domain;
    e.metric = m;
  } else {
    std::visit([&](auto& m) { m = scale_metric(m, s); }, e.metric);
  }
  return e;
}

Input resolve(const RunConfig& cfg) {
  if (cfg.catalog && cfg.config) throw UsageError("give either --catalog or --config, not both");
  Input in;
  if (cfg.catalog) {
    in.entry = catalog_get(*cfg.catalog);
    in.label = in.entry->id;
    if (cfg.scale) in.entry = scaled_entry(*in.entry, *cfg.scale);
  } else if (cfg.config) {
    in.config = load_metric_config(*cfg.config);
    in.label = *cfg.config;
    if (cfg.scale) {
      std::visit(
          [&](auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, FullMetricEndo>)
              throw UsageError("--scale does not apply to kind 'full'");
            else
              m = scale_metric(m, *cfg.scale);
          },
          in.config->metric);
    }
  } else {
    throw UsageError("command '" + cfg.command + "' needs --catalog <id> or --config <path>");
  }
  return in;
}

End parse_end(const std::string& s) {
  if (s == "lower") return End::Lower;
  if (s == "upper") return End::Upper;
  throw UsageError("--end must be lower or upper");
}

Interval profile_window(const AnyMetric& m) {
  if (const auto* d = std::get_if<DiagonalMetric>(&m)) return sampling_window(*d, 0.05);
  const auto& p = std::get<ProductMetric>(m);
  const double len = p.domain.length();
  return {p.domain.lo + 0.05 * len, p.domain.hi - 0.05 * len};
}

std::vector<double> sample_points(Interval w, int n) {
  std::vector<double> t(n);
  for (int k = 0; k < n; ++k) t[k] = n == 1 ? w.lo : w.lo + w.length() * k / (n - 1);
  return t;
}

Profile curvature_profile(const AnyMetric& m, int n) {
  Profile p;
  p.columns = {"t"};
  if (const auto* d = std::get_if<DiagonalMetric>(&m)) {
    for (const char* c : kComponentNames) p.columns.push_back(c);
    p.columns.push_back("A_residual");
    for (double t : sample_points(profile_window(m), n)) {
      const auto c = curvature_components(*d, t);
      std::vector<double> row{t};
      for (int i = 0; i < 9; ++i) row.push_back(c[i]);
      row.push_back(solve_connection_A(*d, t).residual);
      p.rows.push_back(row);
    }
  } else {
    const auto& q = std::get<ProductMetric>(m);
    p.columns.insert(p.columns.end(), {"sec12", "secT", "sec4", "secT4"});
    for (double t : sample_points(profile_window(m), n)) {
      const auto c = curvature_components_product(q, t);
      p.rows.push_back({t, c.sec12, c.secT, c.sec4, c.secT4});
    }
  }
  return p;
}

Profile invariants_profile(const AnyMetric& m, int n) {
  Profile p;
  if (const auto* d = std::get_if<DiagonalMetric>(&m)) {
    p.columns = {"t", "ric1", "ric2", "ric3", "ric4", "scalar", "nabla_R", "nabla_ric"};
    for (double t : sample_points(profile_window(m), n)) {
      const auto r = ricci(*d, t);
      p.rows.push_back({t, r[0], r[1], r[2], r[3], r[0] + r[1] + r[2] + r[3], nabla_R_norm(*d, t),
                        nabla_ricci_norm(*d, t)});
    }
  } else {
    const auto& q = std::get<ProductMetric>(m);
    p.columns = {"t", "ric_sphere", "ric_circle", "ric_radial", "scalar", "nabla_R", "nabla_ric"};
    for (double t : sample_points(profile_window(m), n)) {
      const auto c = curvature_components_product(q, t);
      const double rs = c.sec12 + c.secT + c.sec4, rc = 2 * c.secT + c.secT4, rr = 2 * c.sec4 + c.secT4;
      p.rows.push_back({t, rs, rc, rr, 2 * rs + rc + rr, nabla_R_norm(q, t), nabla_ricci_norm(q, t)});
    }
  }
  return p;
}

json entry_json(const CatalogEntry& e) {
  MetricConfig c;
  if (const auto* d = std::get_if<DiagonalMetric>(&e.metric))
    c.metric = *d;
  else
    c.metric = std::get<ProductMetric>(e.metric);
  json j{{"id", e.id},
         {"manifold", e.manifold},
         {"compact", e.compact},
         {"homogeneous", e.homogeneous},
         {"einstein", e.einstein},
         {"metric", metric_to_json(c)},
         {"lower", diagram_to_json(e.lower)}};
  j["upper"] = e.upper ? diagram_to_json(*e.upper) : json(nullptr);
  return j;
}

struct Output {
  json report;
  std::optional<Profile> profile;
  int code = kExitPositive;
};

Output execute(const RunConfig& cfg) {
  Output o;
  const std::string& c = cfg.command;
  const bool csv = cfg.format == "csv";
  if (csv && c != "curvature" && c != "invariants")
    throw UsageError("--format csv is only available for the sampled profiles (curvature, invariants)");
  if (cfg.system && c != "solve" && c != "reproduce") throw UsageError("--system only applies to solve and reproduce");
  if (cfg.box && !cfg.system) throw UsageError("--box needs --system");
  if (cfg.fault && c != "reproduce") throw UsageError("--fault only applies to reproduce");

  if (c == "catalog") {
    if (cfg.catalog) {
      o.report = entry_json(catalog_get(*cfg.catalog));
    } else {
      o.report = json::array();
      for (const auto& e : catalog()) o.report.push_back(entry_json(e));
    }
    return o;
  }
  if (c == "solve") {
    if (!cfg.system) throw UsageError("solve needs --system <id>");
    const auto& sys = get_system(*cfg.system);
    RootFinderOptions ro;
    if (cfg.tol) ro.accept_tol = *cfg.tol;
    if (cfg.box) ro.box = parse_box(sys, *cfg.box);
    const auto rep = find_roots(sys, ro);
    o.report = to_json(rep);
    json known = json::array();
    for (const auto& k : sys.family ? sys.known_families : sys.known_roots)
      known.push_back({{"x", k.x}, {"provenance", k.provenance}});
    o.report["known"] = known;
    o.code = rep.matches_known() ? kExitPositive : kExitNegative;
    return o;
  }
  if (c == "reproduce") {
    ReproduceOptions ro;
    ro.seed = cfg.seed;
    if (cfg.fault) {
      if (*cfg.fault != "mixed-sign") throw UsageError("unknown --fault '" + *cfg.fault + "' (known: mixed-sign)");
      ro.curvature.mixed_sign = -1.0;
    }
    if (cfg.system) {
      const auto& sys = get_system(*cfg.system);
      ro.box_system = sys.id;
      if (cfg.box) ro.box = parse_box(sys, *cfg.box);
    }
    const auto rows = reproduce(ro);
    o.report = to_json(rows);
    for (const auto& r : rows)
      if (!r.pass) o.code = kExitNegative;
    return o;
  }

  const Input in = resolve(cfg);
  if (c == "curvature" || c == "invariants") {
    const int n = cfg.samples.value_or(50);
    const AnyMetric m = in.metric();
    Profile p = c == "curvature" ? curvature_profile(m, n) : invariants_profile(m, n);
    o.report = {{"input", in.label}, {"profile", to_json(p)}};
    o.profile = std::move(p);
    return o;
  }
  if (c == "check-ch") {
    CHOptions co;
    if (cfg.tol) co.tol = *cfg.tol;
    if (cfg.samples) co.samples = *cfg.samples;
    const AnyMetric m = in.metric();
    const auto r = std::visit([&](const auto& x) { return is_curvature_homogeneous(x, co); }, m);
    o.report = to_json(r, std::holds_alternative<DiagonalMetric>(m) ? 9 : 4);
    o.report["input"] = in.label;
    o.report["tol"] = co.tol;
    o.report["samples"] = co.samples;
    o.code = r.verdict ? kExitPositive : kExitNegative;
    return o;
  }
  if (c == "check-smooth") {
    const End end = parse_end(cfg.end);
    const int order = cfg.order.value_or(kDefaultSmoothOrder);
    SmoothnessReport r;
    if (in.entry) {
      if (end == End::Upper && !in.entry->upper) throw UsageError(in.entry->id + " has no upper singular orbit");
      r = check_smooth_entry(*in.entry, end, order);
    } else {
      if (!in.config->diagram) throw UsageError("config needs a 'diagram' for check-smooth");
      if (const auto* f = std::get_if<FullMetricEndo>(&in.config->metric)) {
        if (end == End::Upper) throw UsageError("kind 'full' is checked at the lower end only");
        r = check_smooth_full(*f, *in.config->diagram, order);
      } else {
        r = check_smooth(in.metric(), *in.config->diagram, end, order);
      }
    }
    o.report = to_json(r);
    o.report["input"] = in.label;
    o.report["end"] = to_string(end);
    o.code = r.verdict == Verdict::NotSmooth ? kExitNegative : kExitPositive;
    return o;
  }
  if (c == "classify") {
    ClassifyOptions co;
    if (cfg.tol) co.ch.tol = *cfg.tol;
    if (cfg.samples) co.ch.samples = *cfg.samples;
    const auto r = classify_metric(in.metric(), co);
    o.report = to_json(r);
    o.report["input"] = in.label;
    o.code = r.kind == ClassKind::Match ? kExitPositive : kExitNegative;
    return o;
  }
  throw UsageError("unknown command '" + c + "'");
}

void check_bounds(const RunConfig& cfg) {
  if (cfg.tol && !(*cfg.tol >= 1e-14 && *cfg.tol <= 1e-2)) throw UsageError("--tol must lie in [1e-14, 1e-2]");
  if (cfg.samples && (*cfg.samples < 10 || *cfg.samples > 1000000))
    throw UsageError("--samples must lie in [10, 1000000]");
  if (cfg.order && (*cfg.order < 2 || *cfg.order > 40)) throw UsageError("--order must lie in [2, 40]");
  if (cfg.scale && !(*cfg.scale > 0 && std::isfinite(*cfg.scale))) throw UsageError("--scale must be positive");
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Output o;
  try {
    check_bounds(cfg);
    o = execute(cfg);
  } catch (const std::exception& e) {
    // usage mistakes, bad configs and metrics that cannot be evaluated where asked
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream text;
  if (cfg.format == "csv" && o.profile)
    write_csv(text, *o.profile);
  else
    text << o.report.dump(2) << '\n';
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << *cfg.out << "'\n";
      return kExitUsage;
    }
    f << text.str();
  } else {
    out << text.str();
  }
  return o.code;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature homogeneity checks for cohomogeneity one four-manifolds"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  const char* commands[][2] = {
      {"curvature", "frame curvature components sampled along the normal geodesic"},
      {"check-ch", "decide curvature homogeneity by constancy of the frame components"},
      {"check-smooth", "smoothness conditions at a singular orbit"},
      {"classify", "match a curvature homogeneous metric against the catalog"},
      {"solve", "all roots of a named constraint system in its box"},
      {"invariants", "Ricci, scalar curvature and covariant derivative norms"},
      {"catalog", "list the catalog, or one entry"},
      {"reproduce", "run every check and print a pass/fail table"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--catalog", cfg.catalog, "catalog id");
    sub->add_option("--config", cfg.config, "metric config (JSON)");
    sub->add_option("--tol", cfg.tol, "tolerance override");
    sub->add_option("--samples", cfg.samples, "sample count override");
    sub->add_option("--order", cfg.order, "series order for smoothness checks");
    sub->add_option("--seed", cfg.seed, "seed for random sweeps");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("--scale", cfg.scale, "family parameter (ex5, ex9, ex10) or homothety factor");
    sub->add_option("--system", cfg.system, "constraint system id");
    sub->add_option("--box", cfg.box, "box overrides, name=lo:hi,...");
    sub->add_option("--end", cfg.end, "lower or upper singular orbit");
    sub->add_option("--fault", cfg.fault, "reproduce with a deliberately broken formula: mixed-sign");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace cohom
