#pragma once

#include <string>

namespace boxgap {

/// Fixed 10-significant-digit rendering used by every text output.
std::string format_real(double value);

}  // namespace boxgap
