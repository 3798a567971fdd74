#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cohom/classifier/constraint_systems.hpp"
#include "cohom/metrics/metric.hpp"

namespace cohom {


/// An ansatz for (v1, v2, v3) with the constraint system it leads to. v1 (or every
/// v_i for the codimension-four families) vanishes at t = 0.
struct AnsatzFamily {
  std::string id;  // same id as its constraint system
  std::vector<Param> params;
  /// Throws DegenerateAnsatz when a parameter makes some v_i vanish identically.
  DiagonalMetric build(const std::vector<double>& x) const;
  const ConstraintSystem& constraints() const { return get_system(id); }
};

const std::vector<AnsatzFamily>& ansatz_families();
/// Throws UnknownSystem.
const AnsatzFamily& get_ansatz(std::string_view id);

/// Largest |coefficient| over the non-constant orders -4..order of the nine curvature
/// components expanded at t = 0. Zero iff the frame components are constant to that
/// order near the singular orbit.
double boundary_obstruction(const DiagonalMetric& m, int order = 6);

}  // namespace cohom
