#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace cohom {

struct RunConfig {
  std::string command;  // curvature, check-ch, check-smooth, classify, solve, invariants, catalog, reproduce
  std::optional<std::string> catalog;
  std::optional<std::string> config;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<int> order;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::string format = "json";
  std::optional<double> scale;
  std::optional<std::string> system;
  std::optional<std::string> box;
  std::string end = "lower";
  std::optional<std::string> fault;  // reproduce only: "mixed-sign"
};

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Execute one command. Reports go to cfg.out or `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parse argv and run; usage errors return kExitUsage.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cohom
