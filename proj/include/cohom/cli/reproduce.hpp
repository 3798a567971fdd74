#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohom/classifier/constraint_systems.hpp"
#include "cohom/curvature/curvature.hpp"
#include "cohom/metrics/catalog.hpp"

namespace cohom {

struct ReproduceOptions {
  std::uint64_t seed = 0;
  /// Passed to the closed-form components everywhere they are compared with an oracle.
  CurvatureOptions curvature;
  /// Box override for one system's root-set row.
  std::optional<std::string> box_system;
  std::optional<std::vector<Param>> box;
  int sweep_draws = 10000;
};

struct ReproRow {
  std::string group;  // ch, smooth, roots, oracle, discriminator, sweep, laurent
  std::string id;
  bool pass = false;
  std::string detail;
};

/// The whole pipeline as a list of independent rows; a failing check is a row, never an abort.
std::vector<ReproRow> reproduce(const ReproduceOptions& opt = {});
nlohmann::json to_json(const std::vector<ReproRow>& rows);

/// Multiply the function that collapses at `end` by `factor`; for point collapses all three.
AnyMetric perturb_collapse(const AnyMetric& m, bool upper, double factor);

}  // namespace cohom
