#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/AutoDiff>

namespace cohom {

/// Every system has at most this many unknowns and equations.
inline constexpr int kMaxParams = 3;
inline constexpr int kMaxEquations = 5;

using Dual = Eigen::AutoDiffScalar<Eigen::Matrix<double, kMaxParams, 1>>;

struct Param {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
};

struct KnownRoot {
  std::vector<double> x;
  std::string provenance;
};

/// A named polynomial system, transcribed term by term from its printed form.
struct ConstraintSystem {
  std::string id;
  std::string title;  // the ansatz in words
  std::vector<Param> params;
  int equations = 0;
  std::function<void(const double*, double*)> eval;
  std::function<void(const Dual*, Dual*)> eval_dual;
  /// Isolated roots, in canonical form.
  std::vector<KnownRoot> known_roots;
  /// One-parameter families of roots, by canonical direction (scale-invariant systems only).
  bool family = false;
  std::vector<KnownRoot> known_families;
  /// Map a root to its representative under the declared symmetry.
  std::function<std::vector<double>(std::vector<double>)> canonical;
  std::string symmetry;

  int arity() const { return static_cast<int>(params.size()); }
};

const std::vector<ConstraintSystem>& constraint_systems();
/// Throws UnknownSystem.
const ConstraintSystem& get_system(std::string_view id);

/// Left-hand sides of the printed equations. Throws UnknownSystem, or
/// std::invalid_argument on an arity mismatch.
Eigen::VectorXd constraint_residual(std::string_view id, const Eigen::VectorXd& params);

}  // namespace cohom
