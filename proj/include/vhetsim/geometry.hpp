#ifndef VHETSIM_GEOMETRY_HPP
#define VHETSIM_GEOMETRY_HPP

#include "vhetsim/rng.hpp"

namespace vhetsim {

struct Position {
  double x = 0.0;  // m
  double y = 0.0;  // m
  double z = 0.0;  // m above ground
};

struct AreaBounds {
  double width = 0.0;   // m, x in [0, width]
  double height = 0.0;  // m, y in [0, height]
};

enum class MobilityMode { stationary, pedestrian, cycler, vehicular };

struct MobilityState {
  MobilityMode mode = MobilityMode::stationary;
  double speed_mps = 0.0;
  double heading_rad = 0.0;  // in [0, 2*pi)
};

struct User {
  int id = 0;
  Position pos;
  MobilityState mobility;
};

// Elevation angle (degrees) from a ground user to an aerial platform.
// Requires the platform strictly above the user; 90 deg at nadir.
double elevation_angle_deg(const Position& user, const Position& platform);

// Slant range user->platform over a spherical earth:
//   d = sqrt(R^2 sin^2(theta) + h^2 + 2 h R) - R sin(theta),
// theta the elevation angle in (0, 90] deg, h the platform altitude,
// R the earth radius.
double slant_distance_m(double theta_deg, double altitude_m,
                        double earth_radius_m);

struct TerrestrialDistances {
  double d2d_m = 0.0;  // ground-projected
  double d3d_m = 0.0;  // includes antenna height difference
};

TerrestrialDistances terrestrial_distances(const Position& user,
                                           const Position& bs);

// Advance one constant-speed random-walk step of duration t_d_s: move along
// the current heading, reflect off the area boundary (mirroring the heading),
// then perturb the heading by U(-jitter, +jitter). Stationary users are left
// untouched. Resulting position stays inside the bounds and the heading is
// renormalized to [0, 2*pi).
void step_mobility(User& user, double t_d_s, const AreaBounds& area,
                   double heading_jitter_rad, rng::SplitMix64& gen);

}  // namespace vhetsim

#endif  // VHETSIM_GEOMETRY_HPP
