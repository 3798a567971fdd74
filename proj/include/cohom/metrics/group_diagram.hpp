#pragma once

#include <string>
#include <vector>

namespace cohom {

enum class Group { SU2, SO3xSO2 };
enum class SingularIsotropy { SO2, Pin2, FullGroup, T2, SO3 };

/// Group diagram data at one singular orbit.
struct GroupDiagram {
  Group group = Group::SU2;
  SingularIsotropy singular = SingularIsotropy::SO2;
  std::string principal = "e";  // principal isotropy label: "e", "Z2", "Z4", "D2*", "S1"
  int slice_speed_a = 1;
  int codim = 2;
  bool primed = false;  // a different embedding of the same isotropy group

  friend bool operator==(const GroupDiagram&, const GroupDiagram&) = default;
};

/// The admitted (K, H, a) triples for SU(2) with a codimension-two singular orbit.
const std::vector<GroupDiagram>& admissible_su2_codim2();

/// Throws ConfigError when the diagram violates the table or the codimension rules.
void validate(const GroupDiagram& d);

std::string to_string(Group g);
std::string to_string(SingularIsotropy k);
Group parse_group(const std::string& s);
SingularIsotropy parse_isotropy(const std::string& s);

}  // namespace cohom
