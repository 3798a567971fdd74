#include "cohom/io/config.hpp"

#include <fstream>
#include <sstream>

#include "cohom/errors.hpp"

namespace cohom {

using nlohmann::json;

namespace {

ScalarFunction function_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_number()) return ScalarFunction::constant(v.get<double>());
  if (!v.is_string()) throw ConfigError(std::string("field '") + key + "' must be a function string");
  try {
    return parse_function(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

Interval domain_field(const json& j) {
  if (!j.contains("domain")) throw ConfigError("missing field 'domain'");
  const json& d = j.at("domain");
  if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number())
    throw ConfigError("'domain' must be [lo, hi]");
  Interval w{d[0].get<double>(), d[1].get<double>()};
  if (!(w.lo < w.hi)) throw ConfigError("'domain' must have lo < hi");
  return w;
}

json interval_json(const Interval& w) { return json::array({w.lo, w.hi}); }

}  // namespace

GroupDiagram diagram_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("'diagram' must be an object");
  GroupDiagram d;
  try {
    d.group = parse_group(j.value("group", std::string("SU2")));
    d.slice_speed_a = j.value("a", 1);
    d.codim = j.value("codim", 2);
    d.primed = j.value("primed", false);
    std::string singular = j.value("singular", std::string());
    if (singular.empty()) {
      if (d.group == Group::SU2) {
        // the admitted codimension-two diagram with this speed, or K = G in codimension 4
        if (d.codim == 4) {
          singular = "G";
        } else {
          for (const auto& a : admissible_su2_codim2())
            if (a.slice_speed_a == d.slice_speed_a) {
              singular = to_string(a.singular);
              d.principal = a.principal;
              break;
            }
          if (singular.empty()) throw ConfigError("no admitted diagram with a = " + std::to_string(d.slice_speed_a));
        }
      } else {
        singular = d.codim == 3 ? "SO3" : "T2";
      }
    }
    d.singular = parse_isotropy(singular);
    d.principal = j.value("principal", d.principal);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed diagram: ") + e.what());
  }
  validate(d);
  return d;
}

json diagram_to_json(const GroupDiagram& d) {
  return {{"group", to_string(d.group)}, {"singular", to_string(d.singular)}, {"principal", d.principal},
          {"a", d.slice_speed_a},        {"codim", d.codim},                  {"primed", d.primed}};
}

MetricConfig metric_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("metric config must be a JSON object");
  const std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  MetricConfig c;
  if (kind == "diagonal") {
    DiagonalMetric m;
    m.v = {function_field(j, "v1"), function_field(j, "v2"), function_field(j, "v3")};
    m.domain = domain_field(j);
    c.metric = m;
  } else if (kind == "product") {
    c.metric = ProductMetric{function_field(j, "f"), function_field(j, "g"), domain_field(j)};
  } else if (kind == "full") {
    c.metric = FullMetricEndo{function_field(j, "f1"),  function_field(j, "f2"),  function_field(j, "f3"),
                              function_field(j, "d12"), function_field(j, "d13"), function_field(j, "d23"),
                              domain_field(j)};
  } else {
    throw ConfigError("'kind' must be one of diagonal, product, full");
  }
  if (j.contains("diagram") && !j["diagram"].is_null()) {
    c.diagram = diagram_from_json(j["diagram"]);
    if (auto* d = std::get_if<DiagonalMetric>(&c.metric)) d->diagram = c.diagram;
  }
  return c;
}

json metric_to_json(const MetricConfig& c) {
  json j;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DiagonalMetric>) {
          j = {{"kind", "diagonal"},      {"v1", to_string(m.v[0])}, {"v2", to_string(m.v[1])},
               {"v3", to_string(m.v[2])}, {"domain", interval_json(m.domain)}};
        } else if constexpr (std::is_same_v<T, ProductMetric>) {
          j = {{"kind", "product"}, {"f", to_string(m.f)}, {"g", to_string(m.g)}, {"domain", interval_json(m.domain)}};
        } else {
          j = {{"kind", "full"},          {"f1", to_string(m.f1)},   {"f2", to_string(m.f2)},
               {"f3", to_string(m.f3)},   {"d12", to_string(m.d12)}, {"d13", to_string(m.d13)},
               {"d23", to_string(m.d23)}, {"domain", interval_json(m.domain)}};
        }
      },
      c.metric);
  if (c.diagram) j["diagram"] = diagram_to_json(*c.diagram);
  return j;
}

MetricConfig load_metric_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return metric_from_json(j);
}

}  // namespace cohom
