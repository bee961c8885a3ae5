#ifndef VHETSIM_REPORTING_HPP
#define VHETSIM_REPORTING_HPP

#include "vhetsim/simulation.hpp"

#include <filesystem>
#include <utility>
#include <vector>

namespace vhetsim {

// Energy-saving gain of switching against the always-on baseline, percent:
// (E_baseline - E_switched) / E_baseline * 100.
double gain_percent(double e_baseline_j, double e_switched_j);

// Empirical CDF of the samples: (value ascending, cumulative probability
// i/N). Empty input yields an empty curve.
std::vector<std::pair<double, double>> rate_cdf(std::vector<double> samples);

// Write the standard result files into `out_dir` (created if missing):
//   energy.csv                     one row per run, paired gain included
//   rates_<mode>_<lambda>_<mu>.csv pooled rate CDF per grid cell
//   summary.json                   config echo plus per-run and paired
//                                  aggregates
// Runs that failed (non-empty error) appear in summary.json only. Returns
// the paths written, in write order. Output is byte-deterministic for a
// given input.
std::vector<std::filesystem::path> write_results(
    const std::vector<RunSummary>& runs, const std::filesystem::path& out_dir);

}  // namespace vhetsim

#endif  // VHETSIM_REPORTING_HPP
