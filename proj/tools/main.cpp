#include "vhetsim/config.hpp"
#include "vhetsim/numfmt.hpp"
#include "vhetsim/reporting.hpp"
#include "vhetsim/simulation.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir = "results";
  int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_out = true) {
  cmd->add_option("--config", opts.config_path,
                  "Config file with 'key = value' lines ('#' comments)");
  cmd->add_option("--set", opts.sets,
                  "Override one key, e.g. --set lambda=0.5 (repeatable)")
      ->type_name("KEY=VALUE");
  if (with_out) {
    cmd->add_option("--out", opts.out_dir, "Output directory")
        ->capture_default_str();
  }
  cmd->add_option("--workers", opts.workers,
                  "Parallel runs; 0 = hardware concurrency")
      ->capture_default_str();
}

std::pair<std::string, std::string> split_set(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("--set expects KEY=VALUE, got '" + arg + "'");
  }
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

// Resolution order: defaults, then config file, then VHETSIM_* environment
// variables, then --set, then dedicated flags like --seed.
std::vector<std::pair<std::string, std::string>> load_entries(
    const CommonOpts& opts) {
  std::vector<std::pair<std::string, std::string>> entries;
  if (!opts.config_path.empty()) {
    entries = vhetsim::parse_config_file(opts.config_path);
  }
  return entries;
}

void apply_sets(vhetsim::ScenarioConfig& cfg, const CommonOpts& opts) {
  vhetsim::apply_env_overrides(cfg);
  for (const auto& s : opts.sets) {
    const auto [key, value] = split_set(s);
    vhetsim::set_key(cfg, key, value);
  }
}

void print_run_line(const vhetsim::RunSummary& r) {
  std::cout << "run mode=" << r.config.mode
            << " lambda=" << vhetsim::format_double_shortest(r.config.lambda)
            << " mu=" << r.config.mu << " seed=" << r.config.seed
            << " energy_j=" << vhetsim::format_double_data(r.total_energy_j)
            << " infeasible_slots=" << r.infeasible_slots
            << " unserved_user_slots=" << r.unserved_user_slots << '\n';
}

int finish_sweep(const std::vector<vhetsim::RunSummary>& results,
                 const std::string& out_dir) {
  int failures = 0;
  for (const auto& r : results) {
    if (!r.error.empty()) {
      ++failures;
      std::cerr << "error: run mode=" << r.config.mode << " lambda="
                << vhetsim::format_double_shortest(r.config.lambda)
                << " mu=" << r.config.mu << " seed=" << r.config.seed << ": "
                << r.error << '\n';
    } else {
      print_run_line(r);
    }
  }
  const auto written = vhetsim::write_results(results, out_dir);
  for (const auto& path : written) {
    std::cout << "wrote " << path.string() << '\n';
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vhetsim: two-tier aerial/terrestrial network simulator with "
      "energy-aware cell switching"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  std::int64_t run_seed = -1;
  auto* run_cmd =
      app.add_subcommand("run", "Simulate a single scenario configuration");
  add_common(run_cmd, run_opts);
  run_cmd->add_option("--seed", run_seed, "Master seed (overrides config)");

  CommonOpts sweep_opts;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run every combination of the list-valued keys "
               "mode/lambda/mu/seed from the config");
  add_common(sweep_cmd, sweep_opts);

  CommonOpts preset_opts;
  std::int64_t preset_seed = 1;
  int preset_seeds = 1;
  auto* preset_cmd = app.add_subcommand(
      "reproduce-paper",
      "Run the built-in evaluation grid: modes {csa, a3} x lambda "
      "{0.7, 0.5, 0.2} x mu {100, 500, 700, 1000}");
  add_common(preset_cmd, preset_opts);
  preset_cmd->add_option("--seed", preset_seed, "First master seed")
      ->capture_default_str();
  preset_cmd
      ->add_option("--seeds", preset_seeds, "Number of seeds per grid cell")
      ->capture_default_str();

  CommonOpts validate_opts;
  auto* validate_cmd = app.add_subcommand(
      "validate-config", "Resolve and validate a configuration, then echo it");
  add_common(validate_cmd, validate_opts, /*with_out=*/false);

  try {
    app.parse(argc, argv);

    if (run_cmd->parsed()) {
      vhetsim::ScenarioConfig cfg;
      vhetsim::apply_entries(cfg, load_entries(run_opts));
      apply_sets(cfg, run_opts);
      if (run_seed >= 0) cfg.seed = static_cast<std::uint64_t>(run_seed);
      cfg.validate();
      const auto summary = vhetsim::run(cfg);
      print_run_line(summary);
      const auto written =
          vhetsim::write_results({summary}, run_opts.out_dir);
      for (const auto& path : written) {
        std::cout << "wrote " << path.string() << '\n';
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      vhetsim::ScenarioConfig base;
      const auto entries = load_entries(sweep_opts);
      const auto spec = vhetsim::split_sweep_entries(base, entries);
      vhetsim::apply_env_overrides(base);
      // --set applies to the scalar base; sweep axes come from the file.
      vhetsim::SweepSpec final_spec = spec;
      for (const auto& s : sweep_opts.sets) {
        const auto [key, value] = split_set(s);
        if (key == "mode" || key == "lambda" || key == "mu" || key == "seed") {
          vhetsim::ScenarioConfig probe;
          const auto extra = vhetsim::split_sweep_entries(probe, {{key, value}});
          if (key == "mode") final_spec.modes = extra.modes;
          if (key == "lambda") final_spec.lambdas = extra.lambdas;
          if (key == "mu") final_spec.mus = extra.mus;
          if (key == "seed") final_spec.seeds = extra.seeds;
        } else {
          vhetsim::set_key(base, key, value);
        }
      }
      const auto configs = vhetsim::expand_sweep(base, final_spec);
      for (const auto& cfg : configs) cfg.validate();
      const auto results = vhetsim::run_sweep(configs, sweep_opts.workers);
      return finish_sweep(results, sweep_opts.out_dir);
    }

    if (preset_cmd->parsed()) {
      vhetsim::ScenarioConfig base;
      vhetsim::apply_entries(base, load_entries(preset_opts));
      apply_sets(base, preset_opts);
      if (preset_seed < 0) {
        throw std::invalid_argument("--seed must be >= 0");
      }
      const auto configs = vhetsim::preset_grid(
          base, static_cast<std::uint64_t>(preset_seed), preset_seeds);
      for (const auto& cfg : configs) cfg.validate();
      const auto results = vhetsim::run_sweep(configs, preset_opts.workers);
      return finish_sweep(results, preset_opts.out_dir);
    }

    // validate-config
    vhetsim::ScenarioConfig cfg;
    vhetsim::apply_entries(cfg, load_entries(validate_opts));
    apply_sets(cfg, validate_opts);
    cfg.validate();
    for (const auto& [key, value] : vhetsim::to_key_values(cfg)) {
      std::cout << key << " = " << value << '\n';
    }
    std::cout << "config ok\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
