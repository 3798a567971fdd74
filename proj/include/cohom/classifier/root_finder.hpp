#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom/classifier/constraint_systems.hpp"

namespace cohom {

struct RootFinderOptions {
  int grid = 50;             // points per axis
  double newton_tol = 1e-12; // relative step size at which Newton stops
  int max_iter = 100;
  double accept_tol = 1e-8;  // max |residual| of an accepted root
  double merge_radius = 1e-6;
  int family_samples = 25;
  /// Replaces the system's default box when set (same order as its params).
  std::optional<std::vector<Param>> box;
};

struct FoundRoot {
  std::vector<double> x;
  double residual = 0.0;  // max |r_i|
};

/// A curve of roots, reported by its canonical direction and checked along the curve.
struct FoundFamily {
  std::vector<double> direction;
  int samples = 0;
  double max_relative_residual = 0.0;
  bool verified = false;
};

struct RootReport {
  std::string system;
  std::vector<Param> box;
  std::vector<FoundRoot> roots;
  std::vector<FoundFamily> families;
  /// Known roots (or family directions) that were not found, by provenance.
  std::vector<std::string> missing;
  /// Found roots that match nothing known.
  std::vector<std::vector<double>> extra;
  int seeds = 0;
  bool matches_known() const { return missing.empty() && extra.empty(); }
};

/// Grid seeding, Gauss-Newton polishing, canonicalization under the system's
/// symmetry, box filtering and clustering. The result is sorted lexicographically.
RootReport find_roots(const ConstraintSystem& sys, const RootFinderOptions& opt = {});
RootReport find_roots(std::string_view system_id, const RootFinderOptions& opt = {});

/// Max |r_i| at x.
double max_residual(const ConstraintSystem& sys, const std::vector<double>& x);

/// Parse "name=lo:hi,name=lo:hi" against the system's parameters. Throws ConfigError.
std::vector<Param> parse_box(const ConstraintSystem& sys, const std::string& text);

}  // namespace cohom
