#ifndef VHETSIM_SCENARIO_HPP
#define VHETSIM_SCENARIO_HPP

#include "vhetsim/config.hpp"
#include "vhetsim/geometry.hpp"
#include "vhetsim/power.hpp"
#include "vhetsim/propagation.hpp"

#include <vector>

namespace vhetsim {

enum class Tier { haps, small_cell };

struct BaseStation {
  int id = 0;
  Tier tier = Tier::small_cell;
  Position pos;
  RfParams rf;
  ShadowSigmas sigmas;
  PowerProfile power;
  int total_channels = 0;   // channel pool (loads denominator)
  int assoc_capacity = 0;   // channels available to this network's users
};

struct Scenario {
  ScenarioConfig cfg;
  std::vector<BaseStation> stations;  // index 0 = aerial station
  std::vector<User> users;
  AreaBounds area;
};

// Deterministic deployment for one config: the aerial station over the area
// center, four small cells at the quadrant centroids, and `mu` users placed
// uniformly with mobility modes drawn from the configured mix. All randomness
// comes from the config seed's user_init stream.
Scenario build_scenario(const ScenarioConfig& cfg);

}  // namespace vhetsim

#endif  // VHETSIM_SCENARIO_HPP
