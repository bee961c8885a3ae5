#ifndef VHETSIM_PROPAGATION_HPP
#define VHETSIM_PROPAGATION_HPP

#include "vhetsim/ntn_tables.hpp"
#include "vhetsim/rng.hpp"

namespace vhetsim {

// Instantaneous large-scale link state: LoS/NLoS flag plus the sampled
// log-normal shadow term in dB.
struct LinkCondition {
  bool los = true;
  double shadow_db = 0.0;
};

// Shadow-fading standard deviations for one tier.
struct ShadowSigmas {
  double los_db = 4.0;
  double nlos_db = 6.0;
};

// Transmit-side link-budget parameters.
struct RfParams {
  double tx_power_dbm = 0.0;
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
};

// LoS probability of an aerial-tier link at elevation theta (TR 38.811).
double los_probability_ntn(const NtnTables& tables, double theta_deg,
                           Environment env);

// LoS probability of a terrestrial UMi street-canyon link (TR 38.901):
// 1 for d2d <= 18 m, else 18/d2d + exp(-d2d/36) * (1 - 18/d2d).
double los_probability_tn(double d2d_m);

// Free-space path loss: 32.45 + 20 log10(f_GHz) + 20 log10(d_m).
double fspl_db(double distance_m, double f_c_ghz);

// Clutter loss of an aerial-tier link; zero for LoS, table value for NLoS.
double clutter_loss_ntn_db(const NtnTables& tables, double theta_deg, bool los,
                           Environment env);

// Ionospheric scintillation loss PF/sqrt(2) with the Gaussian pincushion
// factor PF = 1.1 * (f_c / 4 GHz)^-1.5; valid below 6 GHz only.
double scintillation_loss_db(double f_c_ghz);

// Aerial-tier path loss: FSPL over the slant range, plus clutter (NLoS),
// shadow fading, and scintillation. Atmospheric absorption and building-entry
// terms are zero for outdoor S-band users and are omitted.
double path_loss_ntn_db(const NtnTables& tables, double theta_deg,
                        double altitude_m, double earth_radius_m,
                        const LinkCondition& cond, double f_c_ghz,
                        Environment env);

// LoS-probability-weighted aerial path loss with no shadow term; pairs with
// the "blended" large-scale mode.
double blended_path_loss_ntn_db(const NtnTables& tables, double theta_deg,
                                double altitude_m, double earth_radius_m,
                                double f_c_ghz, Environment env);

// Terrestrial UMi street-canyon path loss (TR 38.901, Table 7.4.1-1) plus
// shadow fading. Distances below 1 m are clamped to 1 m (model floor).
// h_bs/h_ut enter through the breakpoint distance and the NLoS height term.
double path_loss_tn_db(double d2d_m, double d3d_m, const LinkCondition& cond,
                       double f_c_ghz, double h_bs_m = 10.0,
                       double h_ut_m = 1.5);

double blended_path_loss_tn_db(double d2d_m, double d3d_m, double f_c_ghz,
                               double h_bs_m = 10.0, double h_ut_m = 1.5);

// Link budget: P_RX = P_TX + G_TX - PL + G_RX, all in dB quantities.
double received_power_dbm(const RfParams& rf, double path_loss_db);

// Draw a LoS/NLoS flag with probability p_los, then a zero-mean Gaussian
// shadow term whose sigma matches the drawn state. The two-generator overload
// keeps the Bernoulli and Gaussian draws on separate named streams so paired
// runs stay aligned; the single-generator overload draws both sequentially.
LinkCondition sample_link_condition(double p_los, const ShadowSigmas& sigmas,
                                    rng::SplitMix64& los_gen,
                                    rng::SplitMix64& shadow_gen);
LinkCondition sample_link_condition(double p_los, const ShadowSigmas& sigmas,
                                    rng::SplitMix64& gen);

}  // namespace vhetsim

#endif  // VHETSIM_PROPAGATION_HPP
