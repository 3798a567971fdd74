#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "cohom/metrics/catalog.hpp"

namespace cohom {

/// A metric read from a configuration document, with its optional diagram.
struct MetricConfig {
  std::variant<DiagonalMetric, ProductMetric, FullMetricEndo> metric;
  std::optional<GroupDiagram> diagram;
};

/// Schema:
///   {"kind": "diagonal", "v1": "...", "v2": "...", "v3": "...", "domain": [lo, hi],
///    "diagram": {"a": 4, "codim": 2, "singular": "Pin2", "principal": "D2*"}}
///   {"kind": "product", "f": "...", "g": "...", "domain": [lo, hi]}
///   {"kind": "full", "f1": ..., "f2": ..., "f3": ..., "d12": ..., "d13": ..., "d23": ..., "domain": [lo, hi]}
/// Function strings use the grammar of parse_function. Throws ConfigError.
MetricConfig metric_from_json(const nlohmann::json& j);
nlohmann::json metric_to_json(const MetricConfig& c);
nlohmann::json diagram_to_json(const GroupDiagram& d);
GroupDiagram diagram_from_json(const nlohmann::json& j);

/// Read and parse a file. Throws ConfigError.
MetricConfig load_metric_config(const std::string& path);

}  // namespace cohom
