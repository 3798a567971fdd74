#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom/metrics/catalog.hpp"
#include "cohom/metrics/metric.hpp"

namespace cohom {

enum class Verdict { Smooth, Orbifold, NotSmooth };
enum class End { Lower, Upper };

std::string to_string(Verdict v);
std::string to_string(End e);

struct ConditionResult {
  std::string id;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct SmoothnessReport {
  Verdict verdict = Verdict::NotSmooth;
  std::optional<int> orbifold_order;
  /// Collapse speed over the expected speed, when a collapse speed is defined.
  std::optional<double> speed_ratio;
  std::vector<ConditionResult> conditions;

  std::vector<ConditionResult> failures() const;
};

inline constexpr int kDefaultSmoothOrder = 10;
inline constexpr double kCoeffTol = 1e-10;

/// Codimension-two collapse of one v_i at the chosen end. The vanishing function is
/// found automatically and moved to slot 1. Throws ConfigError if diagram.codim != 2
/// or if not exactly one function vanishes there.
SmoothnessReport check_smooth_codim2(const DiagonalMetric& m, const GroupDiagram& diagram,
                                     int order = kDefaultSmoothOrder, End end = End::Lower);

/// Codimension four: every f_i = t^2 + t^4 phi_i(t^2). Throws ConfigError unless all
/// three functions vanish at the chosen end.
SmoothnessReport check_smooth_codim4(const DiagonalMetric& m, int order = kDefaultSmoothOrder,
                                     End end = End::Lower);

/// Same conditions for a general P_t, including the off-diagonal ones. f1 collapses.
SmoothnessReport check_smooth_full(const FullMetricEndo& p, const GroupDiagram& diagram,
                                   int order = kDefaultSmoothOrder);

/// Circle collapse (g -> 0) or sphere collapse (f -> 0) at the chosen end.
/// Throws ConfigError if neither function vanishes there.
SmoothnessReport check_smooth_product(const ProductMetric& m, End end, int order = kDefaultSmoothOrder);

/// Dispatch on the catalog entry's diagram at the chosen end.
SmoothnessReport check_smooth_entry(const CatalogEntry& e, End end, int order = kDefaultSmoothOrder);
/// Dispatch on a metric and a diagram (codim 2 or 4 for SU(2), product otherwise).
SmoothnessReport check_smooth(const AnyMetric& m, const GroupDiagram& d, End end, int order = kDefaultSmoothOrder);

}  // namespace cohom
