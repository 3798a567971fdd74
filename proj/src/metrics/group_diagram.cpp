#include "cohom/metrics/group_diagram.hpp"

#include "cohom/errors.hpp"

namespace cohom {

const std::vector<GroupDiagram>& admissible_su2_codim2() {
  static const std::vector<GroupDiagram> table = {
      {Group::SU2, SingularIsotropy::SO2, "e", 1, 2, false},
      {Group::SU2, SingularIsotropy::Pin2, "Z4", 2, 2, false},
      {Group::SU2, SingularIsotropy::SO2, "Z2", 2, 2, false},
      {Group::SU2, SingularIsotropy::Pin2, "D2*", 4, 2, false},
      {Group::SU2, SingularIsotropy::SO2, "Z4", 4, 2, false},
  };
  return table;
}

void validate(const GroupDiagram& d) {
  if (d.slice_speed_a < 1) throw ConfigError("slice speed must be a positive integer");
  if (d.codim < 2 || d.codim > 4) throw ConfigError("singular codimension must be 2, 3 or 4");
  if (d.group == Group::SU2) {
    if (d.singular == SingularIsotropy::FullGroup) {
      if (d.codim != 4 || d.slice_speed_a != 1) throw ConfigError("K = G needs codimension 4 and a = 1");
      return;
    }
    if (d.singular != SingularIsotropy::SO2 && d.singular != SingularIsotropy::Pin2)
      throw ConfigError("singular isotropy " + to_string(d.singular) + " is not a subgroup of SU(2)");
    if (d.codim != 2) throw ConfigError("SO(2) or Pin(2) isotropy has codimension 2");
    for (const auto& row : admissible_su2_codim2())
      if (row.singular == d.singular && row.principal == d.principal && row.slice_speed_a == d.slice_speed_a) return;
    throw ConfigError("(K, H, a) = (" + to_string(d.singular) + ", " + d.principal + ", " +
                      std::to_string(d.slice_speed_a) + ") is not an admitted SU(2) diagram");
  }
  switch (d.singular) {
    case SingularIsotropy::T2:
      if (d.codim != 2) throw ConfigError("T2 isotropy has codimension 2");
      break;
    case SingularIsotropy::SO3:
      if (d.codim != 3) throw ConfigError("SO(3) isotropy has codimension 3");
      break;
    default:
      throw ConfigError("singular isotropy " + to_string(d.singular) + " does not occur for SO(3)SO(2)");
  }
}

std::string to_string(Group g) { return g == Group::SU2 ? "SU2" : "SO3xSO2"; }

std::string to_string(SingularIsotropy k) {
  switch (k) {
    case SingularIsotropy::SO2: return "SO2";
    case SingularIsotropy::Pin2: return "Pin2";
    case SingularIsotropy::FullGroup: return "G";
    case SingularIsotropy::T2: return "T2";
    case SingularIsotropy::SO3: return "SO3";
  }
  return "?";
}

Group parse_group(const std::string& s) {
  if (s == "SU2") return Group::SU2;
  if (s == "SO3xSO2") return Group::SO3xSO2;
  throw ConfigError("unknown group '" + s + "'");
}

SingularIsotropy parse_isotropy(const std::string& s) {
  if (s == "SO2") return SingularIsotropy::SO2;
  if (s == "Pin2") return SingularIsotropy::Pin2;
  if (s == "G" || s == "SU2") return SingularIsotropy::FullGroup;
  if (s == "T2") return SingularIsotropy::T2;
  if (s == "SO3") return SingularIsotropy::SO3;
  throw ConfigError("unknown singular isotropy '" + s + "'");
}

}  // namespace cohom
