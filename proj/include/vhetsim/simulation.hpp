#ifndef VHETSIM_SIMULATION_HPP
#define VHETSIM_SIMULATION_HPP

#include "vhetsim/scenario.hpp"
#include "vhetsim/switching.hpp"

#include <string>
#include <vector>

namespace vhetsim {

struct SlotRecord {
  int slot = 0;
  Policy policy;
  std::vector<double> loads;
  double power_w = 0.0;
  double energy_j = 0.0;
  int unserved = 0;
  bool feasible = false;
  std::vector<double> rates_bps;  // served users only
};

struct RunSummary {
  ScenarioConfig config;
  double gamma = 0.0;  // user density, users per m^2
  std::vector<SlotRecord> slots;
  double total_energy_j = 0.0;
  double mean_power_w = 0.0;
  long long unserved_user_slots = 0;
  int infeasible_slots = 0;
  int all_sc_off_slots = 0;
  std::vector<double> rates_bps;  // pooled over slots, unsorted
  std::string error;              // non-empty when the run failed (sweep mode)
};

// Policy-independent link table for one slot: received power from every
// station at every user, with LoS and shadow draws taken from the seed's
// named streams keyed by (slot, user, station).
LinkTable build_link_table(const Scenario& scenario, const NtnTables& tables,
                           int slot);

// Simulate one config: per slot, advance mobility, rebuild the link table,
// pick the policy (exhaustive search for csa, all-active for a3), and record
// loads, power, energy, and per-user rates.
RunSummary run(const ScenarioConfig& cfg);

// Run every config, `workers` at a time (0 = hardware concurrency). Failures
// are captured per run in RunSummary::error; the sweep itself never throws
// on a failing run.
std::vector<RunSummary> run_sweep(const std::vector<ScenarioConfig>& configs,
                                  int workers = 0);

}  // namespace vhetsim

#endif  // VHETSIM_SIMULATION_HPP
