#include "vhetsim/ntn_tables.hpp"
#include "vhetsim/propagation.hpp"

#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace vhetsim;

namespace {

constexpr double kEarthRadius = 6371000.0;
constexpr double kAltitude = 20000.0;
constexpr double kFc = 2.5;

std::filesystem::path write_temp_tables(const std::string& tag,
                                        const std::string& content) {
  const auto path =
      std::filesystem::temp_directory_path() / ("vhetsim_tables_" + tag + ".txt");
  std::ofstream out(path);
  out << content;
  out.close();
  return path;
}

}  // namespace

TEST_CASE("embedded aerial tables hit the tabulated grid points") {
  const NtnTables& t = NtnTables::embedded();
  CHECK(t.los_probability(10.0, Environment::urban) == doctest::Approx(0.246));
  CHECK(t.los_probability(90.0, Environment::urban) == doctest::Approx(0.992));
  CHECK(t.los_probability(90.0, Environment::urban) >= 0.98);
  CHECK(t.los_probability(10.0, Environment::rural) == doctest::Approx(0.782));
  CHECK(t.clutter_db(90.0, Environment::urban) == doctest::Approx(25.5));
  CHECK(t.clutter_db(10.0, Environment::urban) == doctest::Approx(34.3));
}

TEST_CASE("aerial LoS probability interpolates linearly between grid points") {
  const NtnTables& t = NtnTables::embedded();
  CHECK(t.los_probability(15.0, Environment::urban) ==
        doctest::Approx(0.316).epsilon(1e-12));
  CHECK(t.clutter_db(45.0, Environment::urban) ==
        doctest::Approx(27.25).epsilon(1e-12));
}

TEST_CASE("aerial table lookups clamp to the tabulated angle range") {
  const NtnTables& t = NtnTables::embedded();
  CHECK(t.los_probability(5.0, Environment::urban) ==
        t.los_probability(10.0, Environment::urban));
  CHECK(t.los_probability(95.0, Environment::urban) ==
        t.los_probability(90.0, Environment::urban));
  CHECK(std::abs(t.los_probability(90.0, Environment::urban) -
                 t.los_probability(89.999999, Environment::urban)) < 1e-6);
  CHECK(t.clutter_db(3.0, Environment::rural) ==
        t.clutter_db(10.0, Environment::rural));
}

TEST_CASE("aerial LoS probability rises with elevation in both environments") {
  const NtnTables& t = NtnTables::embedded();
  for (const Environment env : {Environment::urban, Environment::rural}) {
    double prev = -1.0;
    for (double theta = 10.0; theta <= 90.0; theta += 2.5) {
      const double p = t.los_probability(theta, env);
      CHECK(p >= prev);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
  }
  CHECK(t.los_probability(10.0, Environment::rural) >
        t.los_probability(10.0, Environment::urban));
}

TEST_CASE("urban clutter loss falls as elevation rises") {
  const NtnTables& t = NtnTables::embedded();
  double prev = 1e9;
  for (double theta = 10.0; theta <= 90.0; theta += 10.0) {
    const double c = t.clutter_db(theta, Environment::urban);
    CHECK(c <= prev);
    prev = c;
  }
  // The rural column is not monotone point-by-point (its published mid-range
  // values wiggle); pin the endpoints instead.
  CHECK(t.clutter_db(10.0, Environment::rural) >
        t.clutter_db(90.0, Environment::rural));
}

TEST_CASE("table file on disk matches the embedded defaults") {
  const auto path = std::filesystem::path(VHETSIM_DATA_DIR) / "ntn_tables.txt";
  const NtnTables loaded = NtnTables::load(path);
  const NtnTables& embedded = NtnTables::embedded();
  for (int i = 0; i < NtnTables::kRows; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    CHECK(loaded.los_prob_urban[ui] == embedded.los_prob_urban[ui]);
    CHECK(loaded.los_prob_rural[ui] == embedded.los_prob_rural[ui]);
    CHECK(loaded.clutter_db_urban[ui] == embedded.clutter_db_urban[ui]);
    CHECK(loaded.clutter_db_rural[ui] == embedded.clutter_db_rural[ui]);
  }
}

TEST_CASE("table loader rejects malformed files") {
  SUBCASE("missing rows") {
    const auto path = write_temp_tables("missing", "urban los_prob 10 0.5\n");
    CHECK_THROWS_AS(NtnTables::load(path), std::runtime_error);
    std::filesystem::remove(path);
  }
  SUBCASE("unknown environment") {
    const auto path =
        write_temp_tables("env", "ocean los_prob 10 0.5\n");
    CHECK_THROWS_AS(NtnTables::load(path), std::runtime_error);
    std::filesystem::remove(path);
  }
  SUBCASE("off-grid angle") {
    const auto path = write_temp_tables("angle", "urban los_prob 12 0.5\n");
    CHECK_THROWS_AS(NtnTables::load(path), std::runtime_error);
    std::filesystem::remove(path);
  }
  SUBCASE("probability out of range") {
    const auto path = write_temp_tables("prob", "urban los_prob 10 1.5\n");
    CHECK_THROWS_AS(NtnTables::load(path), std::runtime_error);
    std::filesystem::remove(path);
  }
  SUBCASE("nonexistent file") {
    CHECK_THROWS_AS(NtnTables::load("/nonexistent/tables.txt"),
                    std::runtime_error);
  }
}

TEST_CASE("terrestrial LoS probability follows the street-canyon curve") {
  CHECK(los_probability_tn(0.0) == 1.0);
  CHECK(los_probability_tn(18.0) == 1.0);
  CHECK(los_probability_tn(36.0) ==
        doctest::Approx(0.683939720585721161).epsilon(1e-12));
  CHECK(los_probability_tn(200.0) ==
        doctest::Approx(0.0935179873269202541).epsilon(1e-12));
  double prev = 1.0;
  for (double d = 1.0; d <= 600.0; d += 7.0) {
    const double p = los_probability_tn(d);
    CHECK(p <= prev + 1e-15);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    prev = p;
  }
  CHECK_THROWS_AS(los_probability_tn(-1.0), std::invalid_argument);
}

TEST_CASE("free-space path loss anchors and distance doubling") {
  CHECK(fspl_db(1.0, 1.0) == doctest::Approx(32.45).epsilon(1e-12));
  CHECK(fspl_db(20000.0, kFc) ==
        doctest::Approx(126.429400086720376).epsilon(1e-12));
  const double delta = fspl_db(2000.0, kFc) - fspl_db(1000.0, kFc);
  CHECK(delta == doctest::Approx(6.02059991327962390).epsilon(1e-12));
  CHECK_THROWS_AS(fspl_db(0.0, kFc), std::invalid_argument);
  CHECK_THROWS_AS(fspl_db(-5.0, kFc), std::invalid_argument);
  CHECK_THROWS_AS(fspl_db(100.0, 0.0), std::invalid_argument);
}

TEST_CASE("clutter loss applies to NLoS aerial links only") {
  const NtnTables& t = NtnTables::embedded();
  for (double theta = 10.0; theta <= 90.0; theta += 20.0) {
    CHECK(clutter_loss_ntn_db(t, theta, true, Environment::urban) == 0.0);
    CHECK(clutter_loss_ntn_db(t, theta, false, Environment::urban) > 0.0);
  }
  CHECK(clutter_loss_ntn_db(t, 90.0, false, Environment::urban) ==
        doctest::Approx(25.5));
}

TEST_CASE("scintillation loss follows the pincushion scaling") {
  CHECK(scintillation_loss_db(4.0) ==
        doctest::Approx(0.777817459305202277).epsilon(1e-12));
  CHECK(scintillation_loss_db(2.5) ==
        doctest::Approx(1.57419185615985195).epsilon(1e-12));
  CHECK(scintillation_loss_db(6.0) ==
        doctest::Approx(0.423390197405725561).epsilon(1e-12));
  CHECK_THROWS_AS(scintillation_loss_db(6.1), std::invalid_argument);
  CHECK_THROWS_AS(scintillation_loss_db(0.0), std::invalid_argument);
  CHECK_THROWS_AS(scintillation_loss_db(-2.0), std::invalid_argument);
}

TEST_CASE("aerial path loss composes its terms") {
  const NtnTables& t = NtnTables::embedded();
  const LinkCondition los{true, 0.0};
  CHECK(path_loss_ntn_db(t, 90.0, kAltitude, kEarthRadius, los, kFc,
                         Environment::urban) ==
        doctest::Approx(128.003591942880228).epsilon(1e-12));

  // NLoS never loses less than LoS at zero shadow.
  for (double theta = 10.0; theta <= 90.0; theta += 5.0) {
    const LinkCondition nlos{false, 0.0};
    CHECK(path_loss_ntn_db(t, theta, kAltitude, kEarthRadius, nlos, kFc,
                           Environment::urban) >=
          path_loss_ntn_db(t, theta, kAltitude, kEarthRadius, los, kFc,
                           Environment::urban));
  }

  // Shadow fading adds linearly in dB.
  const LinkCondition shadowed{true, 6.0};
  CHECK(path_loss_ntn_db(t, 45.0, kAltitude, kEarthRadius, shadowed, kFc,
                         Environment::urban) -
            path_loss_ntn_db(t, 45.0, kAltitude, kEarthRadius, los, kFc,
                             Environment::urban) ==
        doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("terrestrial path loss matches the two-slope street-canyon model") {
  const LinkCondition los{true, 0.0};
  const LinkCondition nlos{false, 0.0};

  // Below the 150 m breakpoint.
  CHECK(path_loss_tn_db(100.0, 100.360599838781354, los, kFc) ==
        doctest::Approx(82.3916283889365737).epsilon(1e-12));
  // Above the breakpoint.
  CHECK(path_loss_tn_db(200.0, std::hypot(200.0, 8.5), los, kFc) ==
        doctest::Approx(91.0567136452742325).epsilon(1e-12));
  // NLoS takes the max of the two curves.
  CHECK(path_loss_tn_db(100.0, 100.360599838781354, nlos, kFc) ==
        doctest::Approx(101.531304851714520).epsilon(1e-12));

  for (double d2d = 10.0; d2d <= 5000.0; d2d *= 1.5) {
    const double d3d = std::hypot(d2d, 8.5);
    CHECK(path_loss_tn_db(d2d, d3d, nlos, kFc) >=
          path_loss_tn_db(d2d, d3d, los, kFc));
  }
}

TEST_CASE("terrestrial path loss grows with distance and stays continuous at the breakpoint") {
  const LinkCondition los{true, 0.0};
  const LinkCondition nlos{false, 0.0};
  for (const auto& cond : {los, nlos}) {
    double prev = -1e9;
    for (double d2d = 2.0; d2d <= 5000.0; d2d *= 1.2) {
      const double pl = path_loss_tn_db(d2d, std::hypot(d2d, 8.5), cond, kFc);
      CHECK(pl > prev);
      prev = pl;
    }
  }
  const double below =
      path_loss_tn_db(149.999, std::hypot(149.999, 8.5), los, kFc);
  const double above =
      path_loss_tn_db(150.001, std::hypot(150.001, 8.5), los, kFc);
  CHECK(std::abs(above - below) < 0.05);
}

TEST_CASE("terrestrial path loss clamps distances below the 1 m model floor") {
  const LinkCondition los{true, 0.0};
  CHECK(path_loss_tn_db(0.0, 0.0, los, kFc) ==
        path_loss_tn_db(1.0, 1.0, los, kFc));
  CHECK_THROWS_AS(path_loss_tn_db(-1.0, 5.0, los, kFc), std::invalid_argument);
}

TEST_CASE("received power follows the link budget") {
  const RfParams haps{49.0, 43.2, 0.0};
  const NtnTables& t = NtnTables::embedded();
  const LinkCondition los{true, 0.0};
  const double pl = path_loss_ntn_db(t, 90.0, kAltitude, kEarthRadius, los,
                                     kFc, Environment::urban);
  CHECK(received_power_dbm(haps, pl) ==
        doctest::Approx(-35.8035919428802280).epsilon(1e-12));

  const RfParams sc{33.0, 4.0, 0.0};
  CHECK(received_power_dbm(sc, 100.0) == doctest::Approx(-63.0).epsilon(1e-12));
  CHECK(received_power_dbm(RfParams{10.0, 5.0, 2.0}, 17.0) ==
        doctest::Approx(0.0));
}

TEST_CASE("link-condition sampling respects degenerate probabilities") {
  const ShadowSigmas sigmas{4.0, 6.0};
  auto gen = rng::substream(3, rng::Stream::los, 0, 0, 0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(sample_link_condition(1.0, sigmas, gen).los);
    CHECK_FALSE(sample_link_condition(0.0, sigmas, gen).los);
  }
  CHECK_THROWS_AS(sample_link_condition(1.5, sigmas, gen),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_link_condition(-0.1, sigmas, gen),
                  std::invalid_argument);
}

TEST_CASE("link-condition sampling matches its probability and sigmas") {
  const ShadowSigmas sigmas{4.0, 6.0};
  const int n = 100000;
  int los_count = 0;
  double sum_los = 0.0, sum_sq_los = 0.0;
  double sum_nlos = 0.0, sum_sq_nlos = 0.0;
  for (int i = 0; i < n; ++i) {
    auto los_gen = rng::substream(5, rng::Stream::los, 0, 0,
                                  static_cast<std::uint64_t>(i));
    auto shadow_gen = rng::substream(5, rng::Stream::shadow, 0, 0,
                                     static_cast<std::uint64_t>(i));
    const LinkCondition c =
        sample_link_condition(0.7, sigmas, los_gen, shadow_gen);
    if (c.los) {
      ++los_count;
      sum_los += c.shadow_db;
      sum_sq_los += c.shadow_db * c.shadow_db;
    } else {
      sum_nlos += c.shadow_db;
      sum_sq_nlos += c.shadow_db * c.shadow_db;
    }
  }
  const double frac = static_cast<double>(los_count) / n;
  CHECK(frac == doctest::Approx(0.7).epsilon(0.02));
  const double mean_los = sum_los / los_count;
  const double sd_los = std::sqrt(sum_sq_los / los_count - mean_los * mean_los);
  CHECK(std::abs(mean_los) < 0.06);
  CHECK(sd_los == doctest::Approx(4.0).epsilon(0.02));
  const int nlos_count = n - los_count;
  const double mean_nlos = sum_nlos / nlos_count;
  const double sd_nlos =
      std::sqrt(sum_sq_nlos / nlos_count - mean_nlos * mean_nlos);
  CHECK(std::abs(mean_nlos) < 0.09);
  CHECK(sd_nlos == doctest::Approx(6.0).epsilon(0.02));
}

TEST_CASE("blended path loss equals the sampled mean with shadowing off") {
  const NtnTables& t = NtnTables::embedded();
  const ShadowSigmas no_shadow{0.0, 0.0};
  const int n = 100000;
  for (const double theta : {10.0, 45.0, 90.0}) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      auto gen = rng::substream(13, rng::Stream::los,
                                static_cast<std::uint64_t>(theta), 0,
                                static_cast<std::uint64_t>(i));
      const double p = los_probability_ntn(t, theta, Environment::urban);
      const LinkCondition c = sample_link_condition(p, no_shadow, gen);
      sum += path_loss_ntn_db(t, theta, kAltitude, kEarthRadius, c, kFc,
                              Environment::urban);
    }
    const double mc_mean = sum / n;
    const double blended = blended_path_loss_ntn_db(
        t, theta, kAltitude, kEarthRadius, kFc, Environment::urban);
    CHECK(std::abs(mc_mean - blended) < 0.1);
  }
}
