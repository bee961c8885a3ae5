#include "vhetsim/config.hpp"

#include "vhetsim/numfmt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vhetsim {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v.empty()) {
    throw std::invalid_argument("config: empty value for key '" + key + "'");
  }
  char* end = nullptr;
  const double parsed = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || std::isnan(parsed)) {
    throw std::invalid_argument("config: key '" + key +
                                "' expects a number, got '" + v + "'");
  }
  return parsed;
}

long long parse_int(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v.empty()) {
    throw std::invalid_argument("config: empty value for key '" + key + "'");
  }
  char* end = nullptr;
  const long long parsed = std::strtoll(v.c_str(), &end, 10);
  if (end != v.c_str() + v.size()) {
    throw std::invalid_argument("config: key '" + key +
                                "' expects an integer, got '" + v + "'");
  }
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config: key '" + key +
                              "' expects a boolean, got '" + v + "'");
}

struct KeyEntry {
  const char* name;
  void (*set)(ScenarioConfig&, const std::string&, const std::string&);
  std::string (*get)(const ScenarioConfig&);
};

#define VHETSIM_DOUBLE_KEY(field)                                       \
  KeyEntry{#field,                                                      \
           [](ScenarioConfig& c, const std::string& k,                  \
              const std::string& v) { c.field = parse_double(k, v); },  \
           [](const ScenarioConfig& c) {                                \
             return format_double_shortest(c.field);                    \
           }}

#define VHETSIM_STRING_KEY(field)                                     \
  KeyEntry{#field,                                                    \
           [](ScenarioConfig& c, const std::string&,                  \
              const std::string& v) { c.field = trim(v); },           \
           [](const ScenarioConfig& c) { return c.field; }}

const std::vector<KeyEntry>& key_table() {
  static const std::vector<KeyEntry> table = {
      VHETSIM_STRING_KEY(mode),
      VHETSIM_DOUBLE_KEY(lambda),
      KeyEntry{"mu",
               [](ScenarioConfig& c, const std::string& k,
                  const std::string& v) {
                 c.mu = static_cast<int>(parse_int(k, v));
               },
               [](const ScenarioConfig& c) { return std::to_string(c.mu); }},
      KeyEntry{"seed",
               [](ScenarioConfig& c, const std::string& k,
                  const std::string& v) {
                 const long long s = parse_int(k, v);
                 if (s < 0) {
                   throw std::invalid_argument(
                       "config: key 'seed' expects a value >= 0");
                 }
                 c.seed = static_cast<std::uint64_t>(s);
               },
               [](const ScenarioConfig& c) { return std::to_string(c.seed); }},
      VHETSIM_DOUBLE_KEY(area_width_m),
      VHETSIM_DOUBLE_KEY(area_height_m),
      KeyEntry{"n_ts",
               [](ScenarioConfig& c, const std::string& k,
                  const std::string& v) {
                 c.n_ts = static_cast<int>(parse_int(k, v));
               },
               [](const ScenarioConfig& c) { return std::to_string(c.n_ts); }},
      VHETSIM_DOUBLE_KEY(t_d_s),
      VHETSIM_STRING_KEY(environment),
      VHETSIM_STRING_KEY(los_mode),
      VHETSIM_STRING_KEY(association_rule),
      VHETSIM_STRING_KEY(ntn_tables_file),
      VHETSIM_DOUBLE_KEY(f_c_ghz),
      VHETSIM_DOUBLE_KEY(total_bandwidth_hz),
      VHETSIM_DOUBLE_KEY(per_ue_bandwidth_hz),
      VHETSIM_DOUBLE_KEY(haps_altitude_m),
      VHETSIM_DOUBLE_KEY(earth_radius_m),
      VHETSIM_DOUBLE_KEY(sc_height_m),
      VHETSIM_DOUBLE_KEY(ue_height_m),
      VHETSIM_DOUBLE_KEY(sc_tx_power_dbm),
      VHETSIM_DOUBLE_KEY(sc_tx_gain_dbi),
      VHETSIM_DOUBLE_KEY(haps_tx_power_dbm),
      VHETSIM_DOUBLE_KEY(haps_tx_gain_dbi),
      VHETSIM_DOUBLE_KEY(ue_rx_gain_dbi),
      VHETSIM_DOUBLE_KEY(sigma_los_sc_db),
      VHETSIM_DOUBLE_KEY(sigma_nlos_sc_db),
      VHETSIM_DOUBLE_KEY(sigma_los_haps_db),
      VHETSIM_DOUBLE_KEY(sigma_nlos_haps_db),
      VHETSIM_DOUBLE_KEY(rx_sensitivity_dbm),
      VHETSIM_DOUBLE_KEY(noise_density_dbm_hz),
      VHETSIM_DOUBLE_KEY(noise_figure_db),
      VHETSIM_DOUBLE_KEY(sc_const_power_w),
      VHETSIM_DOUBLE_KEY(sc_power_slope),
      VHETSIM_DOUBLE_KEY(sc_max_tx_power_w),
      VHETSIM_DOUBLE_KEY(sc_sleep_power_w),
      VHETSIM_DOUBLE_KEY(haps_const_power_w),
      VHETSIM_DOUBLE_KEY(haps_power_slope),
      VHETSIM_DOUBLE_KEY(haps_max_tx_power_w),
      KeyEntry{"include_other_network_load",
               [](ScenarioConfig& c, const std::string& k,
                  const std::string& v) {
                 c.include_other_network_load = parse_bool(k, v);
               },
               [](const ScenarioConfig& c) {
                 return std::string(c.include_other_network_load ? "true"
                                                                 : "false");
               }},
      VHETSIM_DOUBLE_KEY(speed_pedestrian_mps),
      VHETSIM_DOUBLE_KEY(speed_cycler_mps),
      VHETSIM_DOUBLE_KEY(speed_vehicular_mps),
      VHETSIM_DOUBLE_KEY(mix_stationary),
      VHETSIM_DOUBLE_KEY(mix_pedestrian),
      VHETSIM_DOUBLE_KEY(mix_cycler),
      VHETSIM_DOUBLE_KEY(mix_vehicular),
      VHETSIM_DOUBLE_KEY(heading_jitter_rad),
  };
  return table;
}

#undef VHETSIM_DOUBLE_KEY
#undef VHETSIM_STRING_KEY

const KeyEntry* find_key(const std::string& key) {
  for (const auto& entry : key_table()) {
    if (key == entry.name) return &entry;
  }
  return nullptr;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("config: " + message);
}

}  // namespace

Mode ScenarioConfig::mode_enum() const {
  if (mode == "csa") return Mode::csa;
  if (mode == "a3") return Mode::a3;
  throw std::invalid_argument("config: key 'mode' must be 'csa' or 'a3', got '" +
                              mode + "'");
}

LosSampling ScenarioConfig::los_mode_enum() const {
  if (los_mode == "sampled") return LosSampling::sampled;
  if (los_mode == "blended") return LosSampling::blended;
  throw std::invalid_argument(
      "config: key 'los_mode' must be 'sampled' or 'blended', got '" +
      los_mode + "'");
}

int ScenarioConfig::total_channels() const {
  return static_cast<int>(std::llround(total_bandwidth_hz / per_ue_bandwidth_hz));
}

void ScenarioConfig::validate() const {
  (void)mode_enum();
  (void)los_mode_enum();
  require(environment == "urban" || environment == "rural",
          "key 'environment' must be 'urban' or 'rural', got '" + environment +
              "'");
  require(association_rule == "cascade" || association_rule == "argmax",
          "key 'association_rule' must be 'cascade' or 'argmax', got '" +
              association_rule + "'");
  require(lambda >= 0.0 && lambda <= 1.0 && !std::isnan(lambda),
          "key 'lambda' must be in [0, 1]");
  require(mu >= 0, "key 'mu' must be >= 0");
  require(n_ts >= 1, "key 'n_ts' must be >= 1");
  require(t_d_s > 0.0, "key 't_d_s' must be > 0");
  require(area_width_m > 0.0, "key 'area_width_m' must be > 0");
  require(area_height_m > 0.0, "key 'area_height_m' must be > 0");
  require(f_c_ghz > 0.0 && f_c_ghz <= 6.0,
          "key 'f_c_ghz' must be in (0, 6] (scintillation model bound)");
  require(total_bandwidth_hz > 0.0, "key 'total_bandwidth_hz' must be > 0");
  require(per_ue_bandwidth_hz > 0.0, "key 'per_ue_bandwidth_hz' must be > 0");
  const double ratio = total_bandwidth_hz / per_ue_bandwidth_hz;
  require(std::abs(ratio - std::llround(ratio)) < 1e-6 && ratio >= 1.0,
          "key 'per_ue_bandwidth_hz' must divide 'total_bandwidth_hz' into a "
          "whole number of channels");
  require(haps_altitude_m > 0.0, "key 'haps_altitude_m' must be > 0");
  require(earth_radius_m > 0.0, "key 'earth_radius_m' must be > 0");
  require(sc_height_m >= 0.0, "key 'sc_height_m' must be >= 0");
  require(ue_height_m >= 0.0, "key 'ue_height_m' must be >= 0");
  require(haps_altitude_m > ue_height_m,
          "key 'haps_altitude_m' must exceed 'ue_height_m'");
  require(sigma_los_sc_db >= 0.0, "key 'sigma_los_sc_db' must be >= 0");
  require(sigma_nlos_sc_db >= 0.0, "key 'sigma_nlos_sc_db' must be >= 0");
  require(sigma_los_haps_db >= 0.0, "key 'sigma_los_haps_db' must be >= 0");
  require(sigma_nlos_haps_db >= 0.0, "key 'sigma_nlos_haps_db' must be >= 0");
  require(sc_const_power_w >= 0.0, "key 'sc_const_power_w' must be >= 0");
  require(sc_power_slope >= 0.0, "key 'sc_power_slope' must be >= 0");
  require(sc_max_tx_power_w >= 0.0, "key 'sc_max_tx_power_w' must be >= 0");
  require(sc_sleep_power_w >= 0.0, "key 'sc_sleep_power_w' must be >= 0");
  require(sc_sleep_power_w < sc_const_power_w,
          "key 'sc_sleep_power_w' must be below 'sc_const_power_w'");
  require(haps_const_power_w >= 0.0, "key 'haps_const_power_w' must be >= 0");
  require(haps_power_slope >= 0.0, "key 'haps_power_slope' must be >= 0");
  require(haps_max_tx_power_w >= 0.0, "key 'haps_max_tx_power_w' must be >= 0");
  require(speed_pedestrian_mps > 0.0, "key 'speed_pedestrian_mps' must be > 0");
  require(speed_cycler_mps > 0.0, "key 'speed_cycler_mps' must be > 0");
  require(speed_vehicular_mps > 0.0, "key 'speed_vehicular_mps' must be > 0");
  require(mix_stationary >= 0.0, "key 'mix_stationary' must be >= 0");
  require(mix_pedestrian >= 0.0, "key 'mix_pedestrian' must be >= 0");
  require(mix_cycler >= 0.0, "key 'mix_cycler' must be >= 0");
  require(mix_vehicular >= 0.0, "key 'mix_vehicular' must be >= 0");
  const double mix_sum =
      mix_stationary + mix_pedestrian + mix_cycler + mix_vehicular;
  require(std::abs(mix_sum - 1.0) <= 1e-9,
          "keys 'mix_*' must sum to 1 (got " + format_double_shortest(mix_sum) +
              ")");
  require(heading_jitter_rad >= 0.0, "key 'heading_jitter_rad' must be >= 0");
}

std::vector<std::pair<std::string, std::string>> to_key_values(
    const ScenarioConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(key_table().size());
  for (const auto& entry : key_table()) {
    out.emplace_back(entry.name, entry.get(cfg));
  }
  return out;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& entry : key_table()) k.emplace_back(entry.name);
    return k;
  }();
  return keys;
}

void set_key(ScenarioConfig& cfg, const std::string& key,
             const std::string& value) {
  const KeyEntry* entry = find_key(key);
  if (entry == nullptr) {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  if (value.find(',') != std::string::npos) {
    throw std::invalid_argument("config: key '" + key +
                                "' expects a single value, got a list");
  }
  entry->set(cfg, key, value);
}

std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path.string());
  }
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: expected 'key = value' on line " +
                               std::to_string(lineno) + " of " + path.string());
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error("config: empty key on line " +
                               std::to_string(lineno) + " of " + path.string());
    }
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

void apply_entries(
    ScenarioConfig& cfg,
    const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [key, value] : kv) set_key(cfg, key, value);
}

void apply_env_overrides(
    ScenarioConfig& cfg,
    const std::function<const char*(const std::string&)>& lookup) {
  const auto get = lookup ? lookup : [](const std::string& name) {
    return const_cast<const char*>(std::getenv(name.c_str()));
  };
  for (const auto& key : config_keys()) {
    std::string env_name = "VHETSIM_";
    for (const char ch : key) {
      env_name.push_back(
          static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    if (const char* value = get(env_name)) {
      set_key(cfg, key, value);
    }
  }
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const std::string v = trim(part);
    if (!v.empty()) parts.push_back(v);
  }
  return parts;
}

}  // namespace

SweepSpec split_sweep_entries(
    ScenarioConfig& base,
    const std::vector<std::pair<std::string, std::string>>& kv) {
  SweepSpec spec;
  for (const auto& [key, value] : kv) {
    if (key == "mode") {
      spec.modes = split_list(value);
      require(!spec.modes.empty(), "key 'mode' has no values");
    } else if (key == "lambda") {
      spec.lambdas.clear();
      for (const auto& v : split_list(value)) {
        spec.lambdas.push_back(parse_double(key, v));
      }
      require(!spec.lambdas.empty(), "key 'lambda' has no values");
    } else if (key == "mu") {
      spec.mus.clear();
      for (const auto& v : split_list(value)) {
        spec.mus.push_back(static_cast<int>(parse_int(key, v)));
      }
      require(!spec.mus.empty(), "key 'mu' has no values");
    } else if (key == "seed") {
      spec.seeds.clear();
      for (const auto& v : split_list(value)) {
        const long long s = parse_int(key, v);
        require(s >= 0, "key 'seed' expects values >= 0");
        spec.seeds.push_back(static_cast<std::uint64_t>(s));
      }
      require(!spec.seeds.empty(), "key 'seed' has no values");
    } else {
      set_key(base, key, value);
    }
  }
  return spec;
}

std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& base,
                                         const SweepSpec& spec) {
  const std::vector<std::string> modes =
      spec.modes.empty() ? std::vector<std::string>{base.mode} : spec.modes;
  const std::vector<double> lambdas =
      spec.lambdas.empty() ? std::vector<double>{base.lambda} : spec.lambdas;
  const std::vector<int> mus =
      spec.mus.empty() ? std::vector<int>{base.mu} : spec.mus;
  const std::vector<std::uint64_t> seeds =
      spec.seeds.empty() ? std::vector<std::uint64_t>{base.seed} : spec.seeds;

  std::vector<ScenarioConfig> runs;
  runs.reserve(modes.size() * lambdas.size() * mus.size() * seeds.size());
  for (const auto& mode : modes) {
    for (const double lambda : lambdas) {
      for (const int mu : mus) {
        for (const std::uint64_t seed : seeds) {
          ScenarioConfig cfg = base;
          cfg.mode = mode;
          cfg.lambda = lambda;
          cfg.mu = mu;
          cfg.seed = seed;
          runs.push_back(std::move(cfg));
        }
      }
    }
  }
  return runs;
}

std::vector<ScenarioConfig> preset_grid(const ScenarioConfig& base,
                                        std::uint64_t seed0, int n_seeds) {
  if (n_seeds < 1) {
    throw std::invalid_argument("preset_grid: seed count must be >= 1");
  }
  SweepSpec spec;
  spec.modes = {"csa", "a3"};
  spec.lambdas = {0.7, 0.5, 0.2};
  spec.mus = {100, 500, 700, 1000};
  for (int i = 0; i < n_seeds; ++i) {
    spec.seeds.push_back(seed0 + static_cast<std::uint64_t>(i));
  }
  return expand_sweep(base, spec);
}

}  // namespace vhetsim
