#ifndef VHETSIM_RADIO_HPP
#define VHETSIM_RADIO_HPP

#include <cstddef>
#include <span>

namespace vhetsim {

// Thermal-noise model for one user channel:
//   P_N = density + 10 log10(B) + NF  [dBm].
struct NoiseModel {
  double density_dbm_hz = -174.0;
  double noise_figure_db = 7.0;
  double bandwidth_hz = 200e3;
};

double noise_power_dbm(const NoiseModel& noise);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

// SINR (linear) of the link at position `serving_pos` inside `rx_dbm_active`,
// the received powers from every currently active base station. All active
// non-serving entries count as interference.
double sinr_linear(std::span<const double> rx_dbm_active,
                   std::size_t serving_pos, double noise_dbm);

// Shannon-capacity rate over `bandwidth_hz`: B * log2(1 + SINR).
double data_rate_bps(double sinr_lin, double bandwidth_hz);

}  // namespace vhetsim

#endif  // VHETSIM_RADIO_HPP
