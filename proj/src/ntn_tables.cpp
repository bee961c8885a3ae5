#include "vhetsim/ntn_tables.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace vhetsim {

namespace {

// TR 38.811 Table 6.6.1-1 (LoS probability) and Table 6.6.6.2-1/-3
// (S-band clutter loss), dense-urban and rural columns.
constexpr std::array<double, NtnTables::kRows> kLosUrban = {
    0.246, 0.386, 0.493, 0.613, 0.726, 0.805, 0.919, 0.968, 0.992};
constexpr std::array<double, NtnTables::kRows> kLosRural = {
    0.782, 0.869, 0.919, 0.929, 0.935, 0.940, 0.949, 0.952, 0.998};
constexpr std::array<double, NtnTables::kRows> kClutterUrban = {
    34.3, 30.9, 29.0, 27.7, 26.8, 26.2, 25.8, 25.5, 25.5};
constexpr std::array<double, NtnTables::kRows> kClutterRural = {
    19.52, 18.17, 18.42, 18.28, 18.63, 17.68, 16.50, 16.30, 16.30};

}  // namespace

const NtnTables& NtnTables::embedded() {
  static const NtnTables tables = [] {
    NtnTables t;
    t.los_prob_urban = kLosUrban;
    t.los_prob_rural = kLosRural;
    t.clutter_db_urban = kClutterUrban;
    t.clutter_db_rural = kClutterRural;
    return t;
  }();
  return tables;
}

NtnTables NtnTables::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("ntn tables: cannot open " + path.string());
  }

  std::map<std::pair<std::string, std::string>, std::map<int, double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string env, table;
    double angle = 0.0, value = 0.0;
    if (!(ls >> env)) continue;  // blank line
    if (!(ls >> table >> angle >> value)) {
      throw std::runtime_error("ntn tables: malformed line " +
                               std::to_string(lineno) + " in " + path.string());
    }
    std::string extra;
    if (ls >> extra) {
      throw std::runtime_error("ntn tables: trailing tokens on line " +
                               std::to_string(lineno) + " in " + path.string());
    }
    if (env != "urban" && env != "rural") {
      throw std::runtime_error("ntn tables: unknown environment '" + env +
                               "' on line " + std::to_string(lineno));
    }
    if (table != "los_prob" && table != "clutter_db") {
      throw std::runtime_error("ntn tables: unknown table '" + table +
                               "' on line " + std::to_string(lineno));
    }
    const double idx = (angle - kMinAngleDeg) / kStepDeg;
    const int i = static_cast<int>(std::lround(idx));
    if (std::abs(idx - i) > 1e-9 || i < 0 || i >= kRows) {
      throw std::runtime_error("ntn tables: angle " + std::to_string(angle) +
                               " is not on the 10..90 deg grid (line " +
                               std::to_string(lineno) + ")");
    }
    if (table == "los_prob" && (value < 0.0 || value > 1.0)) {
      throw std::runtime_error("ntn tables: LoS probability out of [0, 1] on line " +
                               std::to_string(lineno));
    }
    auto& dest = rows[{env, table}];
    if (dest.count(i) != 0) {
      throw std::runtime_error("ntn tables: duplicate entry on line " +
                               std::to_string(lineno));
    }
    dest[i] = value;
  }

  NtnTables t;
  auto take = [&](const char* env, const char* table,
                  std::array<double, kRows>& dest) {
    const auto it = rows.find({env, table});
    if (it == rows.end() || static_cast<int>(it->second.size()) != kRows) {
      throw std::runtime_error(std::string("ntn tables: incomplete grid for ") +
                               env + " " + table + " in " + path.string());
    }
    for (const auto& [i, v] : it->second) dest[static_cast<std::size_t>(i)] = v;
  };
  take("urban", "los_prob", t.los_prob_urban);
  take("rural", "los_prob", t.los_prob_rural);
  take("urban", "clutter_db", t.clutter_db_urban);
  take("rural", "clutter_db", t.clutter_db_rural);
  return t;
}

double NtnTables::interpolate(const std::array<double, kRows>& row,
                              double theta_deg) const {
  if (std::isnan(theta_deg)) {
    throw std::invalid_argument("ntn tables: elevation angle is NaN");
  }
  const double max_angle = kMinAngleDeg + kStepDeg * (kRows - 1);
  const double theta = std::clamp(theta_deg, kMinAngleDeg, max_angle);
  const double pos = (theta - kMinAngleDeg) / kStepDeg;
  const int lo = std::min(static_cast<int>(pos), kRows - 2);
  const double frac = pos - lo;
  const auto ulo = static_cast<std::size_t>(lo);
  return row[ulo] + frac * (row[ulo + 1] - row[ulo]);
}

double NtnTables::los_probability(double theta_deg, Environment env) const {
  return interpolate(
      env == Environment::urban ? los_prob_urban : los_prob_rural, theta_deg);
}

double NtnTables::clutter_db(double theta_deg, Environment env) const {
  return interpolate(
      env == Environment::urban ? clutter_db_urban : clutter_db_rural,
      theta_deg);
}

}  // namespace vhetsim
