#pragma once

#include <string>

namespace cohom {

/// Shortest decimal text that parses back to exactly x.
std::string format_real(double x);

}  // namespace cohom
