#include "vhetsim/reporting.hpp"

#include "vhetsim/numfmt.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace vhetsim {

double gain_percent(double e_baseline_j, double e_switched_j) {
  if (!(e_baseline_j > 0.0)) {
    throw std::invalid_argument("gain_percent: baseline energy must be > 0");
  }
  if (e_switched_j < 0.0) {
    throw std::invalid_argument("gain_percent: switched energy must be >= 0");
  }
  return (e_baseline_j - e_switched_j) / e_baseline_j * 100.0;
}

std::vector<std::pair<double, double>> rate_cdf(std::vector<double> samples) {
  std::vector<std::pair<double, double>> curve;
  if (samples.empty()) return curve;
  std::sort(samples.begin(), samples.end());
  curve.reserve(samples.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    curve.emplace_back(samples[i], static_cast<double>(i + 1) / n);
  }
  return curve;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Grid-cell key; lambda compared through its exact bit pattern, since the
// grid values are copied around, never recomputed.
std::uint64_t bits(double v) {
  std::uint64_t b = 0;
  static_assert(sizeof(b) == sizeof(v));
  std::memcpy(&b, &v, sizeof(b));
  return b;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("reporting: cannot open " + path.string() +
                             " for writing");
  }
  return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw std::runtime_error("reporting: failed writing " + path.string());
  }
}

}  // namespace

std::vector<std::filesystem::path> write_results(
    const std::vector<RunSummary>& runs,
    const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;

  // Pair up csa/a3 runs that share (lambda, mu, seed).
  struct Pair {
    const RunSummary* csa = nullptr;
    const RunSummary* a3 = nullptr;
  };
  using PairKey = std::tuple<std::uint64_t, int, std::uint64_t>;
  std::map<PairKey, Pair> pairs;
  for (const RunSummary& r : runs) {
    if (!r.error.empty()) continue;
    const PairKey key{bits(r.config.lambda), r.config.mu, r.config.seed};
    if (r.config.mode == "csa") {
      pairs[key].csa = &r;
    } else if (r.config.mode == "a3") {
      pairs[key].a3 = &r;
    }
  }
  auto paired_gain = [&](const RunSummary& r) -> double {
    const PairKey key{bits(r.config.lambda), r.config.mu, r.config.seed};
    const auto it = pairs.find(key);
    if (it == pairs.end() || it->second.csa == nullptr ||
        it->second.a3 == nullptr) {
      return std::nan("");
    }
    return gain_percent(it->second.a3->total_energy_j,
                        it->second.csa->total_energy_j);
  };

  // energy.csv: one row per successful run, in input order.
  {
    const auto path = out_dir / "energy.csv";
    auto out = open_out(path);
    out << "mode,lambda,mu,seed,gamma,total_energy_j,mean_power_w,gain_pct,"
           "infeasible_slots,unserved_user_slots,all_sc_off_slots\n";
    for (const RunSummary& r : runs) {
      if (!r.error.empty()) continue;
      const double gain = paired_gain(r);
      out << r.config.mode << ',' << format_double_shortest(r.config.lambda)
          << ',' << r.config.mu << ',' << r.config.seed << ','
          << format_double_data(r.gamma) << ','
          << format_double_data(r.total_energy_j) << ','
          << format_double_data(r.mean_power_w) << ','
          << (std::isnan(gain) ? std::string() : format_double_data(gain))
          << ',' << r.infeasible_slots << ',' << r.unserved_user_slots << ','
          << r.all_sc_off_slots << '\n';
    }
    close_checked(out, path);
    written.push_back(path);
  }

  // rates_<mode>_<lambda>_<mu>.csv: pooled empirical CDF per grid cell.
  {
    using CellKey = std::tuple<std::string, double, int>;
    std::map<CellKey, std::vector<double>> cells;
    for (const RunSummary& r : runs) {
      if (!r.error.empty()) continue;
      auto& pool = cells[{r.config.mode, r.config.lambda, r.config.mu}];
      pool.insert(pool.end(), r.rates_bps.begin(), r.rates_bps.end());
    }
    for (auto& [key, pool] : cells) {
      const auto& [mode, lambda, mu] = key;
      std::ostringstream name;
      name << "rates_" << mode << '_' << format_double_shortest(lambda) << '_'
           << mu << ".csv";
      const auto path = out_dir / name.str();
      auto out = open_out(path);
      out << "rate_bps,cdf\n";
      for (const auto& [rate, cdf] : rate_cdf(std::move(pool))) {
        out << format_double_data(rate) << ',' << format_double_data(cdf)
            << '\n';
      }
      close_checked(out, path);
      written.push_back(path);
    }
  }

  // summary.json: config echo plus aggregates.
  {
    nlohmann::json doc;
    doc["runs"] = nlohmann::json::array();
    for (const RunSummary& r : runs) {
      nlohmann::json jr;
      nlohmann::json cfg_echo;
      for (const auto& [k, v] : to_key_values(r.config)) cfg_echo[k] = v;
      jr["config"] = cfg_echo;
      if (!r.error.empty()) {
        jr["error"] = r.error;
        doc["runs"].push_back(jr);
        continue;
      }
      jr["gamma"] = r.gamma;
      jr["total_energy_j"] = r.total_energy_j;
      jr["mean_power_w"] = r.mean_power_w;
      jr["infeasible_slots"] = r.infeasible_slots;
      jr["unserved_user_slots"] = r.unserved_user_slots;
      jr["all_sc_off_slots"] = r.all_sc_off_slots;
      jr["n_rate_samples"] = r.rates_bps.size();
      const double med = median(r.rates_bps);
      if (std::isnan(med)) {
        jr["median_rate_bps"] = nullptr;
      } else {
        jr["median_rate_bps"] = med;
      }
      doc["runs"].push_back(jr);
    }

    doc["pairs"] = nlohmann::json::array();
    struct CellAgg {
      int n = 0;
      double sum_gain = 0.0;
      double sum_csa = 0.0;
      double sum_a3 = 0.0;
    };
    std::map<std::pair<std::uint64_t, int>, CellAgg> cell_aggs;
    std::map<std::pair<std::uint64_t, int>, double> lambda_of;
    for (const auto& [key, pair] : pairs) {
      if (pair.csa == nullptr || pair.a3 == nullptr) continue;
      const double gain = gain_percent(pair.a3->total_energy_j,
                                       pair.csa->total_energy_j);
      nlohmann::json jp;
      jp["lambda"] = pair.csa->config.lambda;
      jp["mu"] = pair.csa->config.mu;
      jp["seed"] = pair.csa->config.seed;
      jp["e_csa_j"] = pair.csa->total_energy_j;
      jp["e_a3_j"] = pair.a3->total_energy_j;
      jp["gain_pct"] = gain;
      doc["pairs"].push_back(jp);

      const std::pair<std::uint64_t, int> cell{std::get<0>(key),
                                               std::get<1>(key)};
      auto& agg = cell_aggs[cell];
      agg.n += 1;
      agg.sum_gain += gain;
      agg.sum_csa += pair.csa->total_energy_j;
      agg.sum_a3 += pair.a3->total_energy_j;
      lambda_of[cell] = pair.csa->config.lambda;
    }

    doc["aggregates"] = nlohmann::json::array();
    for (const auto& [cell, agg] : cell_aggs) {
      nlohmann::json ja;
      ja["lambda"] = lambda_of[cell];
      ja["mu"] = cell.second;
      ja["n_seeds"] = agg.n;
      ja["mean_gain_pct"] = agg.sum_gain / agg.n;
      ja["mean_e_csa_j"] = agg.sum_csa / agg.n;
      ja["mean_e_a3_j"] = agg.sum_a3 / agg.n;
      ja["gain_of_mean_energy_pct"] =
          gain_percent(agg.sum_a3 / agg.n, agg.sum_csa / agg.n);
      doc["aggregates"].push_back(ja);
    }

    const auto path = out_dir / "summary.json";
    auto out = open_out(path);
    out << doc.dump(2) << '\n';
    close_checked(out, path);
    written.push_back(path);
  }

  return written;
}

}  // namespace vhetsim
