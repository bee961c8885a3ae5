#ifndef VHETSIM_SWITCHING_HPP
#define VHETSIM_SWITCHING_HPP

#include "vhetsim/association.hpp"
#include "vhetsim/power.hpp"

#include <vector>

namespace vhetsim {

// Everything one slot's policy decision depends on. The link table is
// policy-independent: switching a station off removes its interference and
// its candidacy, but never re-rolls the propagation draws.
struct SlotState {
  const LinkTable* links = nullptr;
  CapacityVector capacities;          // association capacity per station
  std::vector<int> total_channels;    // channel pool per station (for loads)
  std::vector<PowerProfile> profiles; // index 0 = aerial station
  double noise_dbm = 0.0;
  double sensitivity_dbm = 0.0;
  AssociationRule rule = AssociationRule::cascade;
  // Channels the aerial station spends on other networks; counts toward its
  // power-model load only, never toward this network's capacity.
  double haps_extra_channels = 0.0;
};

struct PolicyEvaluation {
  Policy policy;
  bool feasible = false;  // every user served
  double total_power_w = 0.0;
  int unserved_count = 0;
  AssociationMatrix association;
  std::vector<double> loads;  // this network's channel loads per station
};

// All 2^n_sc policies with the aerial station pinned active, in lexicographic
// order of the small-cell bits (all-off first, all-on last).
std::vector<Policy> enumerate_policies(int n_sc);

Policy all_active_policy(int n_sc);

// Associate users under `policy` and price the outcome.
PolicyEvaluation evaluate_policy(const Policy& policy, const SlotState& state);

// Scan every policy and keep the best: feasible beats infeasible; among
// feasible, lower power wins; among infeasible, fewer unserved users wins;
// remaining ties prefer fewer active small cells, then the lexicographically
// smaller activation vector.
PolicyEvaluation exhaustive_search(const SlotState& state);

// True when `a` beats `b` under the search's ranking.
bool policy_preferred(const PolicyEvaluation& a, const PolicyEvaluation& b);

// Linear SINR of each served user under `policy`'s active set; NaN for
// unserved users.
std::vector<double> serving_sinrs(const SlotState& state, const Policy& policy,
                                  const AssociationMatrix& matrix);

}  // namespace vhetsim

#endif  // VHETSIM_SWITCHING_HPP
