#include "vhetsim/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace vhetsim {

double noise_power_dbm(const NoiseModel& noise) {
  if (!(noise.bandwidth_hz > 0.0)) {
    throw std::invalid_argument("noise_power_dbm: bandwidth must be > 0");
  }
  return noise.density_dbm_hz + 10.0 * std::log10(noise.bandwidth_hz) +
         noise.noise_figure_db;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) {
  if (!(mw > 0.0)) {
    throw std::invalid_argument("mw_to_dbm: power must be > 0");
  }
  return 10.0 * std::log10(mw);
}

double sinr_linear(std::span<const double> rx_dbm_active,
                   std::size_t serving_pos, double noise_dbm) {
  if (serving_pos >= rx_dbm_active.size()) {
    throw std::invalid_argument(
        "sinr_linear: serving link is not among the active base stations");
  }
  const double noise_mw = dbm_to_mw(noise_dbm);
  double interference_mw = 0.0;
  for (std::size_t i = 0; i < rx_dbm_active.size(); ++i) {
    if (i == serving_pos) continue;
    interference_mw += dbm_to_mw(rx_dbm_active[i]);
  }
  const double signal_mw = dbm_to_mw(rx_dbm_active[serving_pos]);
  return signal_mw / (noise_mw + interference_mw);
}

double data_rate_bps(double sinr_lin, double bandwidth_hz) {
  if (sinr_lin < 0.0) {
    throw std::invalid_argument("data_rate_bps: SINR must be >= 0");
  }
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("data_rate_bps: bandwidth must be > 0");
  }
  return bandwidth_hz * std::log2(1.0 + sinr_lin);
}

}  // namespace vhetsim
