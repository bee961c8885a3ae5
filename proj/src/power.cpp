#include "vhetsim/power.hpp"

#include <cmath>
#include <stdexcept>

namespace vhetsim {

namespace {

void check_load(double load) {
  if (std::isnan(load) || load < 0.0 || load > 1.0) {
    throw std::invalid_argument("power: load must be in [0, 1]");
  }
}

}  // namespace

int Policy::active_sc_count() const {
  int n = 0;
  for (std::size_t i = 1; i < beta.size(); ++i) n += beta[i] ? 1 : 0;
  return n;
}

double sc_power_w(const PowerProfile& profile, double load, bool active) {
  if (!active) return profile.sleep_w;
  check_load(load);
  return profile.const_w + profile.slope * load * profile.max_tx_w;
}

double haps_power_w(const PowerProfile& profile, double load) {
  check_load(load);
  return profile.const_w + profile.slope * load * profile.max_tx_w;
}

double network_power_w(const Policy& policy, std::span<const double> loads,
                       std::span<const PowerProfile> profiles) {
  const std::size_t n = policy.size();
  if (n == 0 || loads.size() != n || profiles.size() != n) {
    throw std::invalid_argument(
        "network_power_w: policy, loads, and profiles must have equal size");
  }
  if (!policy.active(0)) {
    throw std::invalid_argument(
        "network_power_w: the aerial station (index 0) must stay active");
  }
  double total = haps_power_w(profiles[0], loads[0]);
  for (std::size_t b = 1; b < n; ++b) {
    if (!policy.active(b) && loads[b] != 0.0) {
      throw std::invalid_argument(
          "network_power_w: a sleeping station cannot carry load");
    }
    total += sc_power_w(profiles[b], loads[b], policy.active(b));
  }
  return total;
}

double slot_energy_j(double power_w, double t_d_s) {
  if (power_w < 0.0) {
    throw std::invalid_argument("slot_energy_j: power must be >= 0");
  }
  if (!(t_d_s > 0.0)) {
    throw std::invalid_argument("slot_energy_j: slot duration must be > 0");
  }
  return power_w * t_d_s;
}

}  // namespace vhetsim
