#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohom/metrics/metric.hpp"

namespace cohom {

using AnyMetric = std::variant<DiagonalMetric, ProductMetric>;

struct CatalogEntry {
  std::string id;
  AnyMetric metric;
  std::string manifold;
  GroupDiagram lower;                 // diagram at domain.lo
  std::optional<GroupDiagram> upper;  // diagram at domain.hi, compact entries only
  bool compact = false;
  bool homogeneous = true;
  bool einstein = true;

  const Interval& domain() const;
  bool diagonal() const { return std::holds_alternative<DiagonalMetric>(metric); }
};

/// All entries in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Lookup by id or alias (ex3 -> tsukada, ex8 -> ex8-sphere, ex10 -> ex10-compact).
/// Throws UnknownId.
const CatalogEntry& catalog_get(std::string_view id);

/// Noncompact entries are sampled on [0, kNoncompactWindow].
inline constexpr double kNoncompactWindow = 3.0;

/// (b sin t, b cos t, b) on [0, pi/2]; b = 2 is the smooth member.
DiagonalMetric example5_family(double b);
/// f = cos t, g = a sin t on [0, pi/2]; a = 1 is smooth.
ProductMetric example9_family(double a);
/// f = a, g = sin t, sinh t or t (curvature sign +1, -1, 0); scale multiplies g.
ProductMetric example10_family(int curvature_sign, double a, double scale = 1.0);

}  // namespace cohom
