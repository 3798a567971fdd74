#include "cohom/io/report.hpp"

#include <charconv>
#include <cmath>

namespace cohom {

using nlohmann::json;

namespace {

// non-finite values become strings rather than silently turning into null
json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

std::string csv_number(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

json to_json(const CurvatureData& c) {
  json j;
  for (int i = 0; i < 9; ++i) j[kComponentNames[i]] = number(c[i]);
  return j;
}

json to_json(const ProductCurvature& c) {
  return {{"sec12", number(c.sec12)}, {"secT", number(c.secT)}, {"sec4", number(c.sec4)}, {"secT4", number(c.secT4)}};
}

json to_json(const CHResult& r, int components) {
  static const char* product_names[4] = {"sec12", "secT", "sec4", "secT4"};
  json mean;
  for (int i = 0; i < components; ++i) mean[components == 9 ? kComponentNames[i] : product_names[i]] = number(r.mean[i]);
  return {{"curvature_homogeneous", r.verdict},
          {"max_deviation", number(r.max_deviation)},
          {"window", {r.window.lo, r.window.hi}},
          {"mean", mean}};
}

json to_json(const SmoothnessReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions)
    conds.push_back({{"id", c.id}, {"measured", number(c.measured)}, {"threshold", c.threshold}, {"pass", c.pass}});
  json j{{"verdict", to_string(r.verdict)}, {"conditions", conds}};
  j["orbifold_order"] = r.orbifold_order ? json(*r.orbifold_order) : json(nullptr);
  j["speed_ratio"] = r.speed_ratio ? number(*r.speed_ratio) : json(nullptr);
  return j;
}

json to_json(const RootReport& r) {
  json box = json::array();
  for (const auto& p : r.box) box.push_back({{"name", p.name}, {"lo", p.lo}, {"hi", p.hi}});
  json roots = json::array();
  for (const auto& x : r.roots) roots.push_back({{"x", x.x}, {"residual", x.residual}});
  json fams = json::array();
  for (const auto& f : r.families)
    fams.push_back({{"direction", f.direction},
                    {"samples", f.samples},
                    {"max_relative_residual", f.max_relative_residual},
                    {"verified", f.verified}});
  return {{"system", r.system}, {"box", box},         {"roots", roots},
          {"families", fams},   {"missing", r.missing}, {"extra", r.extra},
          {"seeds", r.seeds},   {"matches_known", r.matches_known()}};
}

json to_json(const Classification& c) {
  json j{{"verdict", to_string(c.kind)}, {"ch_deviation", number(c.ch_deviation)}};
  if (c.kind == ClassKind::Match) {
    j["id"] = c.id;
    j["lambda"] = number(c.lambda);
    j["permutation"] = c.permutation;
    j["exact"] = c.exact;
    j["match_residual"] = number(c.match_residual);
    if (c.family_parameter) j["family_parameter"] = *c.family_parameter;
    if (c.smoothness) j["smoothness"] = *c.smoothness;
    if (c.orbifold_order) j["orbifold_order"] = *c.orbifold_order;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const SweepResult& r) {
  json strata = json::array();
  for (const auto& s : r.strata)
    strata.push_back({{"name", s.name}, {"draws", s.draws}, {"ch", s.ch}, {"min_deviation", number(s.min_deviation)}});
  return {{"draws", r.draws}, {"ch", r.ch}, {"seed", r.seed}, {"strata", strata}};
}

void write_csv(std::ostream& out, const Profile& p) {
  for (std::size_t i = 0; i < p.columns.size(); ++i) out << (i ? "," : "") << p.columns[i];
  out << '\n';
  for (const auto& row : p.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_number(row[i]);
    out << '\n';
  }
}

json to_json(const Profile& p) {
  json rows = json::array();
  for (const auto& row : p.rows) {
    json r = json::array();
    for (double x : row) r.push_back(number(x));
    rows.push_back(r);
  }
  return {{"columns", p.columns}, {"rows", rows}};
}

}  // namespace cohom
