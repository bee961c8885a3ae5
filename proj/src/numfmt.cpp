#include "vhetsim/numfmt.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace vhetsim {

namespace {

// Shortest '%g' string (scanning precisions min_precision..17) that parses
// back to exactly `v`; precision breaks length ties. Keeps every emitted
// number byte-stable and loss-free.
std::string format_with_min_precision(double v, int min_precision) {
  if (std::isnan(v) || std::isinf(v)) {
    throw std::invalid_argument("format_double: value must be finite");
  }
  char buf[64];
  std::string best;
  for (int prec = min_precision; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) != v) continue;
    if (best.empty() || std::char_traits<char>::length(buf) < best.size()) {
      best = buf;
    }
  }
  if (!best.empty()) return best;
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string format_double_shortest(double v) {
  return format_with_min_precision(v, 1);
}

std::string format_double_data(double v) {
  return format_with_min_precision(v, 9);
}

}  // namespace vhetsim
