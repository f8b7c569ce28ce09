#include "uavsim/mobility.hpp"

#include <algorithm>

namespace uavsim {

ZoneRect loiter_rect(const MobilityConfig& cfg) {
  const auto& c = cfg.uav_loiter_center;
  return {c.x - cfg.uav_loiter_half_length_m, c.x + cfg.uav_loiter_half_length_m,
          c.y - cfg.uav_loiter_half_width_m, c.y + cfg.uav_loiter_half_width_m};
}

Position patrol_position(double t, const WorldGeometry& world,
                         const MobilityConfig& cfg) {
  return perimeter_point(world.corridor, cfg.patrol_speed_mps * t,
                         kPatrolHeightM);
}

namespace {

struct IngressLeg {
  Position entry;
  double entry_arc;
  double length;
};

IngressLeg ingress_leg(const MobilityConfig& cfg) {
  const ZoneRect track = loiter_rect(cfg);
  const double arc = nearest_perimeter_arc(track, cfg.uav_ingress_start);
  const Position entry = perimeter_point(track, arc, 0.0);
  return {entry, arc, horizontal_distance(cfg.uav_ingress_start, entry)};
}

}  // namespace

double uav_ingress_duration(double speed, const MobilityConfig& cfg) {
  return ingress_leg(cfg).length / speed;
}

Position uav_position(double t, double speed, double altitude,
                      const WorldGeometry& /*world*/,
                      const MobilityConfig& cfg) {
  const IngressLeg leg = ingress_leg(cfg);
  const double s = speed * t;
  if (s < leg.length) {
    const double f = s / leg.length;
    const auto& a = cfg.uav_ingress_start;
    return {a.x + f * (leg.entry.x - a.x), a.y + f * (leg.entry.y - a.y),
            altitude};
  }
  return perimeter_point(loiter_rect(cfg), leg.entry_arc + (s - leg.length),
                         altitude);
}

UePose pose(const Position& position, const WorldGeometry& world) {
  UePose p{position, in_zone(position, world.corridor), false};
  p.in_nfz = std::any_of(world.nfzs.begin(), world.nfzs.end(),
                         [&](const ZoneRect& z) { return in_zone(position, z); });
  return p;
}

}  // namespace uavsim
