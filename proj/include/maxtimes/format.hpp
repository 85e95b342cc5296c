#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace maxtimes::detail {

// Shortest decimal string that parses back to exactly the same double.
// Used wherever a non-rational value has to be rendered deterministically.
inline std::string shortest_double_string(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace maxtimes::detail
