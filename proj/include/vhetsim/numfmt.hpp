#ifndef VHETSIM_NUMFMT_HPP
#define VHETSIM_NUMFMT_HPP

#include <string>

namespace vhetsim {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double_shortest(double v);

// Data-file form: shortest exact form, with at least 9 significant digits of
// precision available (%.Ng with N >= 9). Round-trips exactly.
std::string format_double_data(double v);

}  // namespace vhetsim

#endif  // VHETSIM_NUMFMT_HPP
