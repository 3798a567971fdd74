#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohom/classifier/classify.hpp"
#include "cohom/classifier/regular_sweep.hpp"
#include "cohom/classifier/root_finder.hpp"
#include "cohom/smoothness/smoothness.hpp"

namespace cohom {

// JSON views of the result types. Keys are sorted (std::map), so equal results dump
// to identical bytes.
nlohmann::json to_json(const CurvatureData& c);
nlohmann::json to_json(const ProductCurvature& c);
nlohmann::json to_json(const CHResult& r, int components);
nlohmann::json to_json(const SmoothnessReport& r);
nlohmann::json to_json(const RootReport& r);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const SweepResult& r);

/// A sampled table: header row, then one row per sample, full precision.
struct Profile {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};
void write_csv(std::ostream& out, const Profile& p);
nlohmann::json to_json(const Profile& p);

}  // namespace cohom
