#pragma once

#include "uavsim/geometry.hpp"

namespace uavsim {

inline constexpr double kPatrolHeightM = 1.5;

struct MobilityConfig {
  double patrol_speed_mps = 5.0;
  Position uav_ingress_start{1000.0, -100.0, 0.0};
  Position uav_loiter_center{1000.0, 150.0, 0.0};
  double uav_loiter_half_length_m = 40.0;
  double uav_loiter_half_width_m = 20.0;

  bool operator==(const MobilityConfig&) const = default;
};

struct UePose {
  Position position;
  bool in_corridor = false;
  bool in_nfz = false;
};

/// Loiter racetrack as a rectangle (z ignored).
ZoneRect loiter_rect(const MobilityConfig& cfg);

/// Patrol terminal walking the corridor perimeter counterclockwise from
/// (x_min, y_min) at constant speed.
Position patrol_position(double t, const WorldGeometry& world,
                         const MobilityConfig& cfg);

/// Straight-line ingress to the racetrack point nearest the ingress start,
/// then counterclockwise laps of the racetrack. Constant altitude throughout.
Position uav_position(double t, double speed, double altitude,
                      const WorldGeometry& world, const MobilityConfig& cfg);

/// Time at which the UAV reaches the racetrack.
double uav_ingress_duration(double speed, const MobilityConfig& cfg);

UePose pose(const Position& position, const WorldGeometry& world);

}  // namespace uavsim
