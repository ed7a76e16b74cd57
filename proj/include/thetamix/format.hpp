#pragma once

#include <string>

namespace thetamix {

/// printf "%.*g"; 17 significant digits round-trips any double.
std::string format_g(double x, int significant_digits = 17);

}  // namespace thetamix
