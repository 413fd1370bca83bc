#include "boxgap/format.hpp"

#include <cstdio>

namespace boxgap {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace boxgap
