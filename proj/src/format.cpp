#include "thetamix/format.hpp"

#include <cstdio>

namespace thetamix {

std::string format_g(double x, int significant_digits) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace thetamix
