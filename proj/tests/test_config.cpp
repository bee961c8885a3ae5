#include "vhetsim/config.hpp"

#include <doctest.h>

#include <stdexcept>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

using namespace vhetsim;

namespace {

std::filesystem::path write_temp_config(const std::string& tag,
                                        const std::string& content) {
  const auto path =
      std::filesystem::temp_directory_path() / ("vhetsim_cfg_" + tag + ".conf");
  std::ofstream out(path);
  out << content;
  out.close();
  return path;
}

}  // namespace

TEST_CASE("the default configuration validates") {
  ScenarioConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.total_channels() == 250);
  CHECK(cfg.mode_enum() == Mode::csa);
  CHECK(cfg.los_mode_enum() == LosSampling::sampled);
}

TEST_CASE("set_key updates fields and rejects nonsense") {
  ScenarioConfig cfg;
  set_key(cfg, "lambda", "0.5");
  CHECK(cfg.lambda == 0.5);
  set_key(cfg, "mode", "a3");
  CHECK(cfg.mode == "a3");
  set_key(cfg, "mu", "700");
  CHECK(cfg.mu == 700);
  set_key(cfg, "include_other_network_load", "true");
  CHECK(cfg.include_other_network_load);
  set_key(cfg, "seed", "42");
  CHECK(cfg.seed == 42);

  CHECK_THROWS_WITH_AS(set_key(cfg, "bogus_key", "1"),
                       doctest::Contains("bogus_key"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(set_key(cfg, "lambda", "abc"),
                       doctest::Contains("lambda"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(set_key(cfg, "mu", "12.5"), doctest::Contains("mu"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(set_key(cfg, "lambda", "0.5,0.7"),
                       doctest::Contains("lambda"), std::invalid_argument);
  CHECK_THROWS_AS(set_key(cfg, "seed", "-3"), std::invalid_argument);
}

TEST_CASE("validation names the offending key") {
  ScenarioConfig cfg;
  cfg.lambda = 1.5;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("lambda"),
                       std::invalid_argument);

  cfg = ScenarioConfig{};
  cfg.per_ue_bandwidth_hz = 300e3;  // 50 MHz / 300 kHz is not whole
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("per_ue_bandwidth_hz"),
                       std::invalid_argument);

  cfg = ScenarioConfig{};
  cfg.mix_stationary = 0.5;  // mix sums to 1.25
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("mix_"),
                       std::invalid_argument);

  cfg = ScenarioConfig{};
  cfg.mode = "other";
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("mode"),
                       std::invalid_argument);

  cfg = ScenarioConfig{};
  cfg.f_c_ghz = 7.0;  // beyond the scintillation model's validity
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("f_c_ghz"),
                       std::invalid_argument);

  cfg = ScenarioConfig{};
  cfg.sc_sleep_power_w = 60.0;  // above the constant term
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("sc_sleep_power_w"),
                       std::invalid_argument);

  cfg = ScenarioConfig{};
  cfg.n_ts = 0;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("n_ts"),
                       std::invalid_argument);

  cfg = ScenarioConfig{};
  cfg.mu = -1;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("mu"),
                       std::invalid_argument);
}

TEST_CASE("config files parse key = value lines with comments") {
  const auto path = write_temp_config("parse",
                                      "# a comment\n"
                                      "mode = a3\n"
                                      "\n"
                                      "lambda = 0.2   # trailing comment\n"
                                      "mu = 500\n"
                                      "environment = rural\n");
  ScenarioConfig cfg;
  apply_entries(cfg, parse_config_file(path));
  CHECK(cfg.mode == "a3");
  CHECK(cfg.lambda == 0.2);
  CHECK(cfg.mu == 500);
  CHECK(cfg.environment == "rural");
  std::filesystem::remove(path);
}

TEST_CASE("config file parsing reports malformed lines") {
  const auto path = write_temp_config("bad", "mode a3\n");
  CHECK_THROWS_AS(parse_config_file(path), std::runtime_error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/cfg.conf"),
                  std::runtime_error);
}

TEST_CASE("the key-value echo round-trips the configuration") {
  ScenarioConfig cfg;
  cfg.lambda = 0.7;
  cfg.mu = 1000;
  cfg.seed = 424242;
  cfg.haps_tx_gain_dbi = 43.2;
  cfg.include_other_network_load = true;
  cfg.environment = "rural";

  ScenarioConfig rebuilt;
  for (const auto& [key, value] : to_key_values(cfg)) {
    set_key(rebuilt, key, value);
  }
  CHECK(to_key_values(rebuilt) == to_key_values(cfg));
  CHECK(rebuilt.lambda == cfg.lambda);
  CHECK(rebuilt.haps_tx_gain_dbi == cfg.haps_tx_gain_dbi);
  CHECK(rebuilt.seed == cfg.seed);
}

TEST_CASE("environment variables override keys through the documented prefix") {
  ScenarioConfig cfg;
  const std::map<std::string, std::string> env = {
      {"VHETSIM_LAMBDA", "0.25"},
      {"VHETSIM_MODE", "a3"},
  };
  apply_env_overrides(cfg, [&](const std::string& name) -> const char* {
    const auto it = env.find(name);
    return it == env.end() ? nullptr : it->second.c_str();
  });
  CHECK(cfg.lambda == 0.25);
  CHECK(cfg.mode == "a3");
  CHECK(cfg.mu == 100);  // untouched
}

TEST_CASE("sweep entries split list axes from scalar keys") {
  ScenarioConfig base;
  const std::vector<std::pair<std::string, std::string>> entries = {
      {"mode", "csa, a3"},
      {"lambda", "0.7, 0.5"},
      {"mu", "100"},
      {"seed", "1, 2, 3"},
      {"n_ts", "10"},
  };
  const SweepSpec spec = split_sweep_entries(base, entries);
  CHECK(base.n_ts == 10);
  CHECK(spec.modes == std::vector<std::string>{"csa", "a3"});
  CHECK(spec.lambdas == std::vector<double>{0.7, 0.5});
  CHECK(spec.mus == std::vector<int>{100});
  CHECK(spec.seeds == std::vector<std::uint64_t>{1, 2, 3});

  const auto runs = expand_sweep(base, spec);
  CHECK(runs.size() == 2 * 2 * 1 * 3);
  // Expansion order: mode-major, then lambda, mu, seed.
  CHECK(runs[0].mode == "csa");
  CHECK(runs[0].lambda == 0.7);
  CHECK(runs[0].seed == 1);
  CHECK(runs[1].seed == 2);
  CHECK(runs[5].lambda == 0.5);
  CHECK(runs.back().mode == "a3");
  CHECK(runs.back().lambda == 0.5);
  CHECK(runs.back().seed == 3);
  for (const auto& r : runs) CHECK(r.n_ts == 10);
}

TEST_CASE("empty sweep axes fall back to the base scalar") {
  ScenarioConfig base;
  base.lambda = 0.42;
  const auto runs = expand_sweep(base, SweepSpec{});
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].lambda == 0.42);
  CHECK(runs[0].mode == "csa");
}

TEST_CASE("the built-in evaluation grid covers both modes and all cells") {
  ScenarioConfig base;
  const auto runs = preset_grid(base, 42, 2);
  CHECK(runs.size() == 2 * 3 * 4 * 2);
  int csa_count = 0;
  for (const auto& r : runs) {
    if (r.mode == "csa") ++csa_count;
    CHECK((r.seed == 42 || r.seed == 43));
    CHECK_NOTHROW(r.validate());
  }
  CHECK(csa_count == 24);
  CHECK_THROWS_AS(preset_grid(base, 1, 0), std::invalid_argument);
}
