#include "vhetsim/scenario.hpp"

#include "vhetsim/association.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace vhetsim {

Scenario build_scenario(const ScenarioConfig& cfg) {
  cfg.validate();

  Scenario sc;
  sc.cfg = cfg;
  sc.area = AreaBounds{cfg.area_width_m, cfg.area_height_m};

  const int channels = cfg.total_channels();

  BaseStation haps;
  haps.id = 0;
  haps.tier = Tier::haps;
  haps.pos = Position{cfg.area_width_m / 2.0, cfg.area_height_m / 2.0,
                      cfg.haps_altitude_m};
  haps.rf = RfParams{cfg.haps_tx_power_dbm, cfg.haps_tx_gain_dbi,
                     cfg.ue_rx_gain_dbi};
  haps.sigmas = ShadowSigmas{cfg.sigma_los_haps_db, cfg.sigma_nlos_haps_db};
  haps.power = PowerProfile{cfg.haps_const_power_w, cfg.haps_power_slope,
                            cfg.haps_max_tx_power_w, 0.0};
  haps.total_channels = channels;
  haps.assoc_capacity = haps_available_capacity(cfg.lambda, channels);
  sc.stations.push_back(haps);

  // Small cells at the quadrant centroids.
  const double qx[] = {0.25, 0.25, 0.75, 0.75};
  const double qy[] = {0.25, 0.75, 0.25, 0.75};
  for (int k = 0; k < 4; ++k) {
    BaseStation bs;
    bs.id = k + 1;
    bs.tier = Tier::small_cell;
    bs.pos = Position{qx[k] * cfg.area_width_m, qy[k] * cfg.area_height_m,
                      cfg.sc_height_m};
    bs.rf = RfParams{cfg.sc_tx_power_dbm, cfg.sc_tx_gain_dbi,
                     cfg.ue_rx_gain_dbi};
    bs.sigmas = ShadowSigmas{cfg.sigma_los_sc_db, cfg.sigma_nlos_sc_db};
    bs.power = PowerProfile{cfg.sc_const_power_w, cfg.sc_power_slope,
                            cfg.sc_max_tx_power_w, cfg.sc_sleep_power_w};
    bs.total_channels = channels;
    bs.assoc_capacity = channels;
    sc.stations.push_back(bs);
  }

  const double mix_cum[3] = {
      cfg.mix_stationary,
      cfg.mix_stationary + cfg.mix_pedestrian,
      cfg.mix_stationary + cfg.mix_pedestrian + cfg.mix_cycler,
  };
  sc.users.reserve(static_cast<std::size_t>(cfg.mu));
  for (int u = 0; u < cfg.mu; ++u) {
    auto gen = rng::substream(cfg.seed, rng::Stream::user_init,
                              static_cast<std::uint64_t>(u));
    std::uniform_real_distribution<double> ux(0.0, cfg.area_width_m);
    std::uniform_real_distribution<double> uy(0.0, cfg.area_height_m);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> uheading(0.0, 2.0 * std::numbers::pi);

    User user;
    user.id = u;
    user.pos = Position{ux(gen), uy(gen), cfg.ue_height_m};

    const double draw = u01(gen);
    MobilityState mob;
    if (draw < mix_cum[0]) {
      mob.mode = MobilityMode::stationary;
      mob.speed_mps = 0.0;
    } else if (draw < mix_cum[1]) {
      mob.mode = MobilityMode::pedestrian;
      mob.speed_mps = cfg.speed_pedestrian_mps;
    } else if (draw < mix_cum[2]) {
      mob.mode = MobilityMode::cycler;
      mob.speed_mps = cfg.speed_cycler_mps;
    } else {
      mob.mode = MobilityMode::vehicular;
      mob.speed_mps = cfg.speed_vehicular_mps;
    }
    mob.heading_rad = uheading(gen);
    user.mobility = mob;
    sc.users.push_back(user);
  }
  return sc;
}

}  // namespace vhetsim
