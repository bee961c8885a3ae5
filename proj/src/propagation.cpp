#include "vhetsim/propagation.hpp"

#include "vhetsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vhetsim {

double los_probability_ntn(const NtnTables& tables, double theta_deg,
                           Environment env) {
  return tables.los_probability(theta_deg, env);
}

double los_probability_tn(double d2d_m) {
  if (d2d_m < 0.0 || std::isnan(d2d_m)) {
    throw std::invalid_argument("los_probability_tn: distance must be >= 0");
  }
  if (d2d_m <= 18.0) return 1.0;
  const double ratio = 18.0 / d2d_m;
  return ratio + std::exp(-d2d_m / 36.0) * (1.0 - ratio);
}

double fspl_db(double distance_m, double f_c_ghz) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("fspl_db: distance must be > 0");
  }
  if (!(f_c_ghz > 0.0)) {
    throw std::invalid_argument("fspl_db: carrier frequency must be > 0");
  }
  return 32.45 + 20.0 * std::log10(f_c_ghz) + 20.0 * std::log10(distance_m);
}

double clutter_loss_ntn_db(const NtnTables& tables, double theta_deg, bool los,
                           Environment env) {
  if (los) return 0.0;
  return tables.clutter_db(theta_deg, env);
}

double scintillation_loss_db(double f_c_ghz) {
  if (!(f_c_ghz > 0.0) || f_c_ghz > 6.0) {
    throw std::invalid_argument(
        "scintillation_loss_db: model is valid for 0 < f_c <= 6 GHz");
  }
  const double pincushion = 1.1 * std::pow(f_c_ghz / 4.0, -1.5);
  return pincushion / std::sqrt(2.0);
}

double path_loss_ntn_db(const NtnTables& tables, double theta_deg,
                        double altitude_m, double earth_radius_m,
                        const LinkCondition& cond, double f_c_ghz,
                        Environment env) {
  const double slant = slant_distance_m(theta_deg, altitude_m, earth_radius_m);
  return fspl_db(slant, f_c_ghz) +
         clutter_loss_ntn_db(tables, theta_deg, cond.los, env) +
         cond.shadow_db + scintillation_loss_db(f_c_ghz);
}

double blended_path_loss_ntn_db(const NtnTables& tables, double theta_deg,
                                double altitude_m, double earth_radius_m,
                                double f_c_ghz, Environment env) {
  const double p = los_probability_ntn(tables, theta_deg, env);
  const LinkCondition los{true, 0.0};
  const LinkCondition nlos{false, 0.0};
  return p * path_loss_ntn_db(tables, theta_deg, altitude_m, earth_radius_m,
                              los, f_c_ghz, env) +
         (1.0 - p) * path_loss_ntn_db(tables, theta_deg, altitude_m,
                                      earth_radius_m, nlos, f_c_ghz, env);
}

namespace {

// UMi street-canyon LoS path loss with the two-slope breakpoint (TR 38.901).
double umi_los_db(double d2d_m, double d3d_m, double f_c_ghz, double h_bs_m,
                  double h_ut_m) {
  constexpr double kSpeedOfLight = 3.0e8;  // propagation constant used by the model
  const double h_bs_eff = h_bs_m - 1.0;    // effective antenna heights
  const double h_ut_eff = h_ut_m - 1.0;
  const double d_bp =
      4.0 * h_bs_eff * h_ut_eff * (f_c_ghz * 1e9) / kSpeedOfLight;
  if (d2d_m <= d_bp) {
    return 32.4 + 21.0 * std::log10(d3d_m) + 20.0 * std::log10(f_c_ghz);
  }
  const double dz = h_bs_m - h_ut_m;
  return 32.4 + 40.0 * std::log10(d3d_m) + 20.0 * std::log10(f_c_ghz) -
         9.5 * std::log10(d_bp * d_bp + dz * dz);
}

double umi_nlos_db(double d3d_m, double f_c_ghz, double h_ut_m) {
  return 35.3 * std::log10(d3d_m) + 22.4 + 21.3 * std::log10(f_c_ghz) -
         0.3 * (h_ut_m - 1.5);
}

}  // namespace

double path_loss_tn_db(double d2d_m, double d3d_m, const LinkCondition& cond,
                       double f_c_ghz, double h_bs_m, double h_ut_m) {
  if (d2d_m < 0.0 || d3d_m < 0.0) {
    throw std::invalid_argument("path_loss_tn_db: distances must be >= 0");
  }
  if (!(f_c_ghz > 0.0)) {
    throw std::invalid_argument("path_loss_tn_db: carrier frequency must be > 0");
  }
  // The model is not defined below 1 m; clamp to its floor.
  const double d2d = std::max(d2d_m, 1.0);
  const double d3d = std::max(d3d_m, 1.0);
  const double los = umi_los_db(d2d, d3d, f_c_ghz, h_bs_m, h_ut_m);
  double pl = los;
  if (!cond.los) {
    pl = std::max(los, umi_nlos_db(d3d, f_c_ghz, h_ut_m));
  }
  return pl + cond.shadow_db;
}

double blended_path_loss_tn_db(double d2d_m, double d3d_m, double f_c_ghz,
                               double h_bs_m, double h_ut_m) {
  const double p = los_probability_tn(d2d_m);
  const LinkCondition los{true, 0.0};
  const LinkCondition nlos{false, 0.0};
  return p * path_loss_tn_db(d2d_m, d3d_m, los, f_c_ghz, h_bs_m, h_ut_m) +
         (1.0 - p) *
             path_loss_tn_db(d2d_m, d3d_m, nlos, f_c_ghz, h_bs_m, h_ut_m);
}

double received_power_dbm(const RfParams& rf, double path_loss_db) {
  return rf.tx_power_dbm + rf.tx_gain_dbi - path_loss_db + rf.rx_gain_dbi;
}

LinkCondition sample_link_condition(double p_los, const ShadowSigmas& sigmas,
                                    rng::SplitMix64& los_gen,
                                    rng::SplitMix64& shadow_gen) {
  if (p_los < 0.0 || p_los > 1.0 || std::isnan(p_los)) {
    throw std::invalid_argument(
        "sample_link_condition: p_los must be in [0, 1]");
  }
  if (sigmas.los_db < 0.0 || sigmas.nlos_db < 0.0) {
    throw std::invalid_argument(
        "sample_link_condition: shadow sigmas must be >= 0");
  }
  LinkCondition cond;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  cond.los = u01(los_gen) < p_los;
  const double sigma = cond.los ? sigmas.los_db : sigmas.nlos_db;
  if (sigma > 0.0) {
    std::normal_distribution<double> normal(0.0, sigma);
    cond.shadow_db = normal(shadow_gen);
  }
  return cond;
}

LinkCondition sample_link_condition(double p_los, const ShadowSigmas& sigmas,
                                    rng::SplitMix64& gen) {
  return sample_link_condition(p_los, sigmas, gen, gen);
}

}  // namespace vhetsim
