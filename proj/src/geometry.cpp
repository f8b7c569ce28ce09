#include "uavsim/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace uavsim {

WorldGeometry default_world() {
  WorldGeometry world;
  world.corridor = {0.0, 2000.0, 0.0, 400.0};
  world.nfzs = {
      {500.0, 700.0, 225.0, 375.0},
      {1300.0, 1500.0, 25.0, 175.0},
  };
  world.gnbs = {
      {0, {800.0, 0.0, 25.0}, 46.0, Backhaul::Terrestrial},
      {1, {1200.0, 0.0, 25.0}, 46.0, Backhaul::Terrestrial},
      {2, {1000.0, 400.0, 25.0}, 46.0, Backhaul::Terrestrial},
  };
  return world;
}

bool in_zone(const Position& pos, const ZoneRect& zone) {
  return pos.x >= zone.x_min && pos.x <= zone.x_max && pos.y >= zone.y_min &&
         pos.y <= zone.y_max;
}

Position perimeter_point(const ZoneRect& rect, double s, double z) {
  const double w = rect.width();
  const double h = rect.height();
  double u = std::fmod(s, rect.perimeter());
  if (u < 0.0) u += rect.perimeter();

  if (u < w) return {rect.x_min + u, rect.y_min, z};
  u -= w;
  if (u < h) return {rect.x_max, rect.y_min + u, z};
  u -= h;
  if (u < w) return {rect.x_max - u, rect.y_max, z};
  u -= w;
  return {rect.x_min, rect.y_max - u, z};
}

double nearest_perimeter_arc(const ZoneRect& rect, const Position& pos) {
  const double w = rect.width();
  const double h = rect.height();
  const double cx = std::clamp(pos.x, rect.x_min, rect.x_max);
  const double cy = std::clamp(pos.y, rect.y_min, rect.y_max);

  // Candidate projections onto each edge, in perimeter order.
  struct Candidate {
    double arc;
    double dist2;
  };
  auto d2 = [&](double x, double y) {
    return (pos.x - x) * (pos.x - x) + (pos.y - y) * (pos.y - y);
  };
  const Candidate cands[4] = {
      {cx - rect.x_min, d2(cx, rect.y_min)},
      {w + (cy - rect.y_min), d2(rect.x_max, cy)},
      {w + h + (rect.x_max - cx), d2(cx, rect.y_max)},
      {2.0 * w + h + (rect.y_max - cy), d2(rect.x_min, cy)},
  };
  const auto best = std::min_element(
      std::begin(cands), std::end(cands),
      [](const Candidate& a, const Candidate& b) { return a.dist2 < b.dist2; });
  return std::fmod(best->arc, rect.perimeter());
}

double horizontal_distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double distance_3d(const Position& a, const Position& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

}  // namespace uavsim
