#ifndef VHETSIM_CONFIG_HPP
#define VHETSIM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace vhetsim {

enum class Mode { csa, a3 };
enum class LosSampling { sampled, blended };

// Full scenario description for one run. Defaults reproduce the reference
// two-tier deployment: a 500 m x 500 m urban area, four small cells at the
// quadrant centroids, and one aerial super-macro station at 20 km over the
// area center.
struct ScenarioConfig {
  // Run identity
  std::string mode = "csa";          // csa | a3
  double lambda = 0.7;               // share of aerial channels offered here
  int mu = 100;                      // user count
  std::uint64_t seed = 1;

  // Scenario
  double area_width_m = 500.0;
  double area_height_m = 500.0;
  int n_ts = 100;                    // time slots
  double t_d_s = 1.0;                // slot duration
  std::string environment = "urban"; // urban | rural
  std::string los_mode = "sampled";  // sampled | blended
  std::string association_rule = "cascade";  // cascade | argmax
  std::string ntn_tables_file;       // optional override of the built-in tables

  // Spectrum
  double f_c_ghz = 2.5;
  double total_bandwidth_hz = 50e6;
  double per_ue_bandwidth_hz = 200e3;

  // Geometry
  double haps_altitude_m = 20000.0;
  double earth_radius_m = 6371000.0;
  double sc_height_m = 10.0;
  double ue_height_m = 1.5;

  // Link budget
  double sc_tx_power_dbm = 33.0;
  double sc_tx_gain_dbi = 4.0;
  double haps_tx_power_dbm = 49.0;
  double haps_tx_gain_dbi = 43.2;
  double ue_rx_gain_dbi = 0.0;
  double sigma_los_sc_db = 4.0;
  double sigma_nlos_sc_db = 6.0;
  double sigma_los_haps_db = 4.0;
  double sigma_nlos_haps_db = 6.0;
  double rx_sensitivity_dbm = -95.0;
  double noise_density_dbm_hz = -174.0;
  double noise_figure_db = 7.0;

  // Power model
  double sc_const_power_w = 56.0;
  double sc_power_slope = 2.6;
  double sc_max_tx_power_w = 6.3;
  double sc_sleep_power_w = 39.0;
  double haps_const_power_w = 130.0;
  double haps_power_slope = 4.7;
  double haps_max_tx_power_w = 20.0;
  bool include_other_network_load = false;

  // Mobility
  double speed_pedestrian_mps = 1.0;
  double speed_cycler_mps = 4.0;
  double speed_vehicular_mps = 14.0;
  double mix_stationary = 0.25;
  double mix_pedestrian = 0.25;
  double mix_cycler = 0.25;
  double mix_vehicular = 0.25;
  double heading_jitter_rad = 0.25;

  Mode mode_enum() const;
  LosSampling los_mode_enum() const;
  int total_channels() const;  // total_bandwidth / per_ue_bandwidth, rounded

  // Throws std::invalid_argument naming the offending key.
  void validate() const;
};

// Ordered key=value view of a config; echoed by validate-config and into
// summary.json, and re-appliable through set_key (round-trips exactly).
std::vector<std::pair<std::string, std::string>> to_key_values(
    const ScenarioConfig& cfg);

// All recognized keys, in canonical order.
const std::vector<std::string>& config_keys();

// Set one key from its text form. Throws std::invalid_argument for unknown
// keys or unparsable values, naming the key.
void set_key(ScenarioConfig& cfg, const std::string& key,
             const std::string& value);

// "key = value" lines with '#' comments and blank lines. Values may be
// comma-separated lists; scalar consumers reject those via set_key.
std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::filesystem::path& path);

// Apply file entries to cfg. List-valued entries are rejected here.
void apply_entries(ScenarioConfig& cfg,
                   const std::vector<std::pair<std::string, std::string>>& kv);

// Environment overrides: for each known key K, if lookup("VHETSIM_" +
// upper(K)) yields a value, apply it. `lookup` defaults to ::getenv.
void apply_env_overrides(
    ScenarioConfig& cfg,
    const std::function<const char*(const std::string&)>& lookup = {});

// One run per combination of the list-valued sweep axes.
struct SweepSpec {
  std::vector<std::string> modes;
  std::vector<double> lambdas;
  std::vector<int> mus;
  std::vector<std::uint64_t> seeds;
};

// Split raw entries into sweep axes (mode, lambda, mu, seed; scalar or list)
// and the scalar rest, which is applied onto `base`.
SweepSpec split_sweep_entries(
    ScenarioConfig& base,
    const std::vector<std::pair<std::string, std::string>>& kv);

// Cartesian expansion in (mode, lambda, mu, seed) order. Axes default to the
// base config's value when empty.
std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& base,
                                         const SweepSpec& spec);

// The built-in evaluation grid: both modes, lambda in {0.7, 0.5, 0.2},
// mu in {100, 500, 700, 1000}, seeds s0..s0+n_seeds-1.
std::vector<ScenarioConfig> preset_grid(const ScenarioConfig& base,
                                        std::uint64_t seed0, int n_seeds);

}  // namespace vhetsim

#endif  // VHETSIM_CONFIG_HPP
