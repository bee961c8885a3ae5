#include "vhetsim/switching.hpp"

#include "vhetsim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vhetsim {

std::vector<Policy> enumerate_policies(int n_sc) {
  if (n_sc < 0 || n_sc > 20) {
    throw std::invalid_argument(
        "enumerate_policies: small-cell count out of range");
  }
  std::vector<Policy> all;
  const std::size_t count = std::size_t{1} << n_sc;
  all.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Policy p;
    p.beta.resize(static_cast<std::size_t>(n_sc) + 1, 0);
    p.beta[0] = 1;  // aerial station always on
    for (int k = 0; k < n_sc; ++k) {
      p.beta[static_cast<std::size_t>(k) + 1] =
          static_cast<std::uint8_t>((i >> (n_sc - 1 - k)) & 1U);
    }
    all.push_back(std::move(p));
  }
  return all;
}

Policy all_active_policy(int n_sc) {
  if (n_sc < 0) {
    throw std::invalid_argument("all_active_policy: small-cell count < 0");
  }
  Policy p;
  p.beta.assign(static_cast<std::size_t>(n_sc) + 1, 1);
  return p;
}

namespace {

void check_state(const SlotState& state) {
  if (state.links == nullptr) {
    throw std::invalid_argument("slot state: missing link table");
  }
  const auto n = static_cast<std::size_t>(state.links->n_bs);
  if (state.capacities.size() != n || state.total_channels.size() != n ||
      state.profiles.size() != n) {
    throw std::invalid_argument(
        "slot state: per-station vectors must match the link table");
  }
  if (state.haps_extra_channels < 0.0) {
    throw std::invalid_argument("slot state: extra channels must be >= 0");
  }
}

}  // namespace

PolicyEvaluation evaluate_policy(const Policy& policy, const SlotState& state) {
  check_state(state);
  if (policy.size() != static_cast<std::size_t>(state.links->n_bs)) {
    throw std::invalid_argument(
        "evaluate_policy: policy size must match the station count");
  }
  if (!policy.active(0)) {
    throw std::invalid_argument(
        "evaluate_policy: the aerial station (index 0) must stay active");
  }

  std::vector<int> active;
  for (std::size_t b = 0; b < policy.size(); ++b) {
    if (policy.active(b)) active.push_back(static_cast<int>(b));
  }

  PolicyEvaluation eval;
  eval.policy = policy;
  auto assoc = associate_users(*state.links, active, state.capacities,
                               state.sensitivity_dbm, state.rule);
  eval.unserved_count = static_cast<int>(assoc.unserved.size());
  eval.feasible = assoc.unserved.empty();
  eval.loads = loads_from_association(assoc.matrix, state.total_channels);
  eval.association = std::move(assoc.matrix);

  // The aerial station's power tracks everything it transmits, including
  // traffic that belongs to other networks sharing it.
  std::vector<double> power_loads = eval.loads;
  if (state.haps_extra_channels > 0.0) {
    power_loads[0] = std::min(
        1.0, power_loads[0] + state.haps_extra_channels / state.total_channels[0]);
  }
  eval.total_power_w = network_power_w(policy, power_loads, state.profiles);
  return eval;
}

bool policy_preferred(const PolicyEvaluation& a, const PolicyEvaluation& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (a.feasible) {
    if (a.total_power_w != b.total_power_w) {
      return a.total_power_w < b.total_power_w;
    }
  } else {
    if (a.unserved_count != b.unserved_count) {
      return a.unserved_count < b.unserved_count;
    }
  }
  const int asc = a.policy.active_sc_count();
  const int bsc = b.policy.active_sc_count();
  if (asc != bsc) return asc < bsc;
  return a.policy.beta < b.policy.beta;
}

PolicyEvaluation exhaustive_search(const SlotState& state) {
  check_state(state);
  const int n_sc = state.links->n_bs - 1;
  PolicyEvaluation best;
  bool have_best = false;
  for (const Policy& p : enumerate_policies(n_sc)) {
    PolicyEvaluation eval = evaluate_policy(p, state);
    if (!have_best || policy_preferred(eval, best)) {
      best = std::move(eval);
      have_best = true;
    }
  }
  return best;
}

std::vector<double> serving_sinrs(const SlotState& state, const Policy& policy,
                                  const AssociationMatrix& matrix) {
  check_state(state);
  const LinkTable& links = *state.links;
  const double noise_mw = dbm_to_mw(state.noise_dbm);

  std::vector<int> active;
  for (std::size_t b = 0; b < policy.size(); ++b) {
    if (policy.active(b)) active.push_back(static_cast<int>(b));
  }

  std::vector<double> out(static_cast<std::size_t>(links.n_users),
                          std::numeric_limits<double>::quiet_NaN());
  for (int u = 0; u < links.n_users; ++u) {
    const int serving = matrix.serving(u);
    if (serving < 0) continue;
    double total_mw = 0.0;
    for (const int b : active) total_mw += links.rx_mw_at(u, b);
    const double signal_mw = links.rx_mw_at(u, serving);
    out[static_cast<std::size_t>(u)] =
        signal_mw / (noise_mw + total_mw - signal_mw);
  }
  return out;
}

}  // namespace vhetsim
