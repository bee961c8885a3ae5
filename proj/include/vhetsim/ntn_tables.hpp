#ifndef VHETSIM_NTN_TABLES_HPP
#define VHETSIM_NTN_TABLES_HPP

#include <array>
#include <filesystem>

namespace vhetsim {

enum class Environment { urban, rural };

// Elevation-indexed link tables for the aerial tier, per 3GPP TR 38.811
// (S-band): LoS probability and the clutter-loss term applied to NLoS links.
// Rows are tabulated at 10..90 degrees in 10-degree steps; lookups clamp to
// that range and interpolate linearly in between.
class NtnTables {
 public:
  static constexpr int kRows = 9;
  static constexpr double kMinAngleDeg = 10.0;
  static constexpr double kStepDeg = 10.0;

  std::array<double, kRows> los_prob_urban{};
  std::array<double, kRows> los_prob_rural{};
  std::array<double, kRows> clutter_db_urban{};
  std::array<double, kRows> clutter_db_rural{};

  // Compiled-in defaults (TR 38.811 dense-urban and rural rows at 2 GHz).
  static const NtnTables& embedded();

  // Parse a table file: one "<environment> <table> <angle_deg> <value>" row
  // per line, '#' comments. Requires the full 10..90 grid for every
  // (environment, table) pair and probabilities inside [0, 1].
  static NtnTables load(const std::filesystem::path& path);

  double los_probability(double theta_deg, Environment env) const;
  double clutter_db(double theta_deg, Environment env) const;

 private:
  double interpolate(const std::array<double, kRows>& row,
                     double theta_deg) const;
};

}  // namespace vhetsim

#endif  // VHETSIM_NTN_TABLES_HPP
