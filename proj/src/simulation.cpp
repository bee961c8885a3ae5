#include "vhetsim/simulation.hpp"

#include "vhetsim/radio.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

namespace vhetsim {

LinkTable build_link_table(const Scenario& scenario, const NtnTables& tables,
                           int slot) {
  const ScenarioConfig& cfg = scenario.cfg;
  const LosSampling los_mode = cfg.los_mode_enum();
  const Environment env =
      cfg.environment == "urban" ? Environment::urban : Environment::rural;

  LinkTable t;
  t.n_users = static_cast<int>(scenario.users.size());
  t.n_bs = static_cast<int>(scenario.stations.size());
  const std::size_t cells =
      static_cast<std::size_t>(t.n_users) * static_cast<std::size_t>(t.n_bs);
  t.rx_dbm.resize(cells);
  t.rx_mw.resize(cells);
  t.los.resize(cells);

  for (int u = 0; u < t.n_users; ++u) {
    const User& user = scenario.users[static_cast<std::size_t>(u)];
    for (int b = 0; b < t.n_bs; ++b) {
      const BaseStation& bs = scenario.stations[static_cast<std::size_t>(b)];
      const auto us = static_cast<std::uint64_t>(u);
      const auto bsid = static_cast<std::uint64_t>(b);
      const auto ts = static_cast<std::uint64_t>(slot);

      double pl_db = 0.0;
      bool los_flag = true;
      if (los_mode == LosSampling::sampled) {
        auto los_gen = rng::substream(cfg.seed, rng::Stream::los, ts, us, bsid);
        auto shadow_gen =
            rng::substream(cfg.seed, rng::Stream::shadow, ts, us, bsid);
        if (bs.tier == Tier::haps) {
          const double theta = elevation_angle_deg(user.pos, bs.pos);
          const double p = los_probability_ntn(tables, theta, env);
          const LinkCondition cond =
              sample_link_condition(p, bs.sigmas, los_gen, shadow_gen);
          pl_db = path_loss_ntn_db(tables, theta, cfg.haps_altitude_m,
                                   cfg.earth_radius_m, cond, cfg.f_c_ghz, env);
          los_flag = cond.los;
        } else {
          const auto d = terrestrial_distances(user.pos, bs.pos);
          const double p = los_probability_tn(d.d2d_m);
          const LinkCondition cond =
              sample_link_condition(p, bs.sigmas, los_gen, shadow_gen);
          pl_db = path_loss_tn_db(d.d2d_m, d.d3d_m, cond, cfg.f_c_ghz,
                                  bs.pos.z, user.pos.z);
          los_flag = cond.los;
        }
      } else {
        // Blended mode: probability-weighted deterministic loss plus a
        // shadow draw at the probability-weighted sigma.
        auto shadow_gen =
            rng::substream(cfg.seed, rng::Stream::shadow, ts, us, bsid);
        double p = 0.0;
        double pl_mean = 0.0;
        if (bs.tier == Tier::haps) {
          const double theta = elevation_angle_deg(user.pos, bs.pos);
          p = los_probability_ntn(tables, theta, env);
          pl_mean =
              blended_path_loss_ntn_db(tables, theta, cfg.haps_altitude_m,
                                       cfg.earth_radius_m, cfg.f_c_ghz, env);
        } else {
          const auto d = terrestrial_distances(user.pos, bs.pos);
          p = los_probability_tn(d.d2d_m);
          pl_mean = blended_path_loss_tn_db(d.d2d_m, d.d3d_m, cfg.f_c_ghz,
                                            bs.pos.z, user.pos.z);
        }
        const double sigma =
            p * bs.sigmas.los_db + (1.0 - p) * bs.sigmas.nlos_db;
        const LinkCondition cond =
            sample_link_condition(1.0, ShadowSigmas{sigma, sigma}, shadow_gen);
        pl_db = pl_mean + cond.shadow_db;
        los_flag = p >= 0.5;
      }

      const double rx = received_power_dbm(bs.rf, pl_db);
      const std::size_t idx = static_cast<std::size_t>(u) *
                                  static_cast<std::size_t>(t.n_bs) +
                              static_cast<std::size_t>(b);
      t.rx_dbm[idx] = rx;
      t.rx_mw[idx] = dbm_to_mw(rx);
      t.los[idx] = los_flag ? 1 : 0;
    }
  }
  return t;
}

namespace {

SlotState make_slot_state(const Scenario& scenario, const LinkTable& links,
                          double noise_dbm) {
  const ScenarioConfig& cfg = scenario.cfg;
  SlotState state;
  state.links = &links;
  for (const BaseStation& bs : scenario.stations) {
    state.capacities.push_back(bs.assoc_capacity);
    state.total_channels.push_back(bs.total_channels);
    state.profiles.push_back(bs.power);
  }
  state.noise_dbm = noise_dbm;
  state.sensitivity_dbm = cfg.rx_sensitivity_dbm;
  state.rule = cfg.association_rule == "argmax"
                   ? AssociationRule::argmax_or_outage
                   : AssociationRule::cascade;
  if (cfg.include_other_network_load) {
    // Channels the aerial station serves for other networks: everything the
    // lambda split withholds from this one.
    state.haps_extra_channels = static_cast<double>(
        scenario.stations[0].total_channels - scenario.stations[0].assoc_capacity);
  }
  return state;
}

}  // namespace

RunSummary run(const ScenarioConfig& cfg) {
  cfg.validate();
  Scenario scenario = build_scenario(cfg);
  const NtnTables tables = cfg.ntn_tables_file.empty()
                               ? NtnTables::embedded()
                               : NtnTables::load(cfg.ntn_tables_file);
  const Mode mode = cfg.mode_enum();
  const NoiseModel noise{cfg.noise_density_dbm_hz, cfg.noise_figure_db,
                         cfg.per_ue_bandwidth_hz};
  const double noise_dbm = noise_power_dbm(noise);
  const int n_sc = static_cast<int>(scenario.stations.size()) - 1;
  const Policy a3 = all_active_policy(n_sc);

  RunSummary summary;
  summary.config = cfg;
  summary.gamma =
      static_cast<double>(cfg.mu) / (cfg.area_width_m * cfg.area_height_m);
  summary.slots.reserve(static_cast<std::size_t>(cfg.n_ts));

  for (int slot = 0; slot < cfg.n_ts; ++slot) {
    for (User& user : scenario.users) {
      auto gen = rng::substream(cfg.seed, rng::Stream::mobility,
                                static_cast<std::uint64_t>(slot),
                                static_cast<std::uint64_t>(user.id));
      step_mobility(user, cfg.t_d_s, scenario.area, cfg.heading_jitter_rad,
                    gen);
    }

    const LinkTable links = build_link_table(scenario, tables, slot);
    const SlotState state = make_slot_state(scenario, links, noise_dbm);

    PolicyEvaluation eval = mode == Mode::csa ? exhaustive_search(state)
                                              : evaluate_policy(a3, state);

    SlotRecord rec;
    rec.slot = slot;
    rec.policy = eval.policy;
    rec.loads = eval.loads;
    rec.power_w = eval.total_power_w;
    rec.energy_j = slot_energy_j(eval.total_power_w, cfg.t_d_s);
    rec.unserved = eval.unserved_count;
    rec.feasible = eval.feasible;

    const std::vector<double> sinrs =
        serving_sinrs(state, eval.policy, eval.association);
    rec.rates_bps.reserve(static_cast<std::size_t>(links.n_users));
    for (const double s : sinrs) {
      if (std::isnan(s)) continue;
      rec.rates_bps.push_back(data_rate_bps(s, cfg.per_ue_bandwidth_hz));
    }

    summary.total_energy_j += rec.energy_j;
    summary.unserved_user_slots += rec.unserved;
    summary.infeasible_slots += rec.feasible ? 0 : 1;
    summary.all_sc_off_slots += eval.policy.active_sc_count() == 0 ? 1 : 0;
    summary.rates_bps.insert(summary.rates_bps.end(), rec.rates_bps.begin(),
                             rec.rates_bps.end());
    summary.slots.push_back(std::move(rec));
  }

  summary.mean_power_w = summary.total_energy_j / (cfg.n_ts * cfg.t_d_s);
  return summary;
}

std::vector<RunSummary> run_sweep(const std::vector<ScenarioConfig>& configs,
                                  int workers) {
  std::vector<RunSummary> results(configs.size());
  if (configs.empty()) return results;

  unsigned n_workers = workers > 0
                           ? static_cast<unsigned>(workers)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers,
                                 static_cast<unsigned>(configs.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      try {
        results[i] = run(configs[i]);
      } catch (const std::exception& e) {
        results[i].config = configs[i];
        results[i].error = e.what();
      }
    }
  };

  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return results;
}

}  // namespace vhetsim
