#ifndef VHETSIM_POWER_HPP
#define VHETSIM_POWER_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace vhetsim {

// EARTH-style affine base-station power profile:
//   active: P = P_const + slope * load * P_max_tx
//   asleep: P = P_sleep
struct PowerProfile {
  double const_w = 0.0;
  double slope = 0.0;
  double max_tx_w = 0.0;
  double sleep_w = 0.0;
};

// On/off configuration of the network for one slot. Index 0 is the aerial
// super-macro station and is pinned active; indices 1..n are the small cells.
struct Policy {
  std::vector<std::uint8_t> beta;

  bool active(std::size_t bs) const { return beta.at(bs) != 0; }
  int active_sc_count() const;
  std::size_t size() const { return beta.size(); }
};

// Power draw of one small cell at the given load, active or asleep.
double sc_power_w(const PowerProfile& profile, double load, bool active);

// Power draw of the always-on aerial station at the given load.
double haps_power_w(const PowerProfile& profile, double load);

// Total network power for a policy: haps_power for index 0, sc_power for the
// rest. A sleeping station must carry zero load.
double network_power_w(const Policy& policy, std::span<const double> loads,
                       std::span<const PowerProfile> profiles);

// Energy consumed over one slot of duration t_d_s.
double slot_energy_j(double power_w, double t_d_s);

}  // namespace vhetsim

#endif  // VHETSIM_POWER_HPP
