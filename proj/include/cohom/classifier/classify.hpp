#pragma once

#include <array>
#include <optional>
#include <string>

#include "cohom/curvature/curvature.hpp"
#include "cohom/metrics/catalog.hpp"

namespace cohom {

enum class ClassKind { Match, UnknownCH, NotCH };
std::string to_string(ClassKind k);

struct Classification {
  ClassKind kind = ClassKind::NotCH;
  /// Catalog id, or "ex5-family" / "ex10-family" for the parameterized families.
  std::string id;
  /// Homothety factor: the components equal lambda^-2 times the reference ones.
  double lambda = 1.0;
  /// The input's v[i] plays the role of the reference's v[permutation[i]].
  std::array<int, 3> permutation{0, 1, 2};
  std::optional<double> family_parameter;
  bool exact = false;  // the functions coincide with the reference's, not just the curvature
  double match_residual = 0.0;
  double ch_deviation = 0.0;
  /// Smoothness verdict at the collapsing end for family matches (orbifold flag).
  std::optional<std::string> smoothness;
  std::optional<int> orbifold_order;
  std::string note;
};

struct ClassifyOptions {
  CHOptions ch;
  double match_tol = 1e-6;
};

/// CH test, then matching of the constant component vector against the catalog
/// modulo scaling and index permutation.
Classification classify_metric(const AnyMetric& m, const ClassifyOptions& opt = {});

}  // namespace cohom
