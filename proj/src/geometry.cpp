#include "vhetsim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace vhetsim {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDegPerRad = 180.0 / kPi;

double wrap_heading(double h) {
  h = std::fmod(h, 2.0 * kPi);
  if (h < 0.0) h += 2.0 * kPi;
  return h;
}
}  // namespace

double elevation_angle_deg(const Position& user, const Position& platform) {
  const double dz = platform.z - user.z;
  if (dz <= 0.0) {
    throw std::invalid_argument(
        "elevation_angle_deg: platform must be strictly above the user");
  }
  const double horizontal = std::hypot(platform.x - user.x, platform.y - user.y);
  if (horizontal == 0.0) return 90.0;
  return std::atan2(dz, horizontal) * kDegPerRad;
}

double slant_distance_m(double theta_deg, double altitude_m,
                        double earth_radius_m) {
  if (!(theta_deg > 0.0) || theta_deg > 90.0) {
    throw std::invalid_argument(
        "slant_distance_m: elevation angle must be in (0, 90] degrees");
  }
  if (altitude_m < 0.0) {
    throw std::invalid_argument("slant_distance_m: altitude must be >= 0");
  }
  if (!(earth_radius_m > 0.0)) {
    throw std::invalid_argument("slant_distance_m: earth radius must be > 0");
  }
  const double s = std::sin(theta_deg / kDegPerRad);
  const double r = earth_radius_m;
  const double h = altitude_m;
  return std::sqrt(r * r * s * s + h * h + 2.0 * h * r) - r * s;
}

TerrestrialDistances terrestrial_distances(const Position& user,
                                           const Position& bs) {
  TerrestrialDistances d;
  d.d2d_m = std::hypot(bs.x - user.x, bs.y - user.y);
  d.d3d_m = std::hypot(d.d2d_m, bs.z - user.z);
  return d;
}

void step_mobility(User& user, double t_d_s, const AreaBounds& area,
                   double heading_jitter_rad, rng::SplitMix64& gen) {
  if (!(t_d_s > 0.0)) {
    throw std::invalid_argument("step_mobility: slot duration must be > 0");
  }
  if (!(area.width > 0.0) || !(area.height > 0.0)) {
    throw std::invalid_argument("step_mobility: area must have positive size");
  }
  if (user.mobility.mode == MobilityMode::stationary) return;

  const double step = user.mobility.speed_mps * t_d_s;
  double x = user.pos.x + std::cos(user.mobility.heading_rad) * step;
  double y = user.pos.y + std::sin(user.mobility.heading_rad) * step;

  // Mirror the position back into the area; each bounce flips the
  // corresponding heading component.
  bool flip_x = false;
  bool flip_y = false;
  auto reflect = [](double v, double hi, bool& flipped) {
    while (v < 0.0 || v > hi) {
      v = (v < 0.0) ? -v : 2.0 * hi - v;
      flipped = !flipped;
    }
    return v;
  };
  x = reflect(x, area.width, flip_x);
  y = reflect(y, area.height, flip_y);

  double heading = user.mobility.heading_rad;
  if (flip_x) heading = kPi - heading;
  if (flip_y) heading = -heading;

  std::uniform_real_distribution<double> jitter(-heading_jitter_rad,
                                                heading_jitter_rad);
  if (heading_jitter_rad > 0.0) heading += jitter(gen);

  user.pos.x = x;
  user.pos.y = y;
  user.mobility.heading_rad = wrap_heading(heading);
}

}  // namespace vhetsim
