#pragma once

#include <vector>

namespace uavsim {

/// Cartesian position in meters. z is height above ground.
struct Position {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Position&) const = default;
};

/// Axis-aligned rectangle on the ground plane.
struct ZoneRect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double perimeter() const { return 2.0 * (width() + height()); }

  bool operator==(const ZoneRect&) const = default;
};

enum class Backhaul { Terrestrial, LeoSatellite };

struct GnbSite {
  int id = 0;
  Position position;  // z is the antenna height
  double tx_power_dbm = 46.0;
  Backhaul backhaul = Backhaul::Terrestrial;

  bool operator==(const GnbSite&) const = default;
};

/// Static map shared by every run: corridor, no-fly zones and cell sites.
struct WorldGeometry {
  ZoneRect corridor;
  std::vector<ZoneRect> nfzs;
  std::vector<GnbSite> gnbs;

  bool operator==(const WorldGeometry&) const = default;
};

/// Canonical map. Corridor [0,2000]x[0,400]; three sites on a triangle whose
/// circumcenter (1000,150) is 250 m from each site; NFZs 200x150 m centered
/// at (600,300) and (1400,100).
WorldGeometry default_world();

/// Closed-rectangle membership test on (x, y); z is ignored.
bool in_zone(const Position& pos, const ZoneRect& zone);

/// Point at arc length `s` along the rectangle perimeter, counterclockwise
/// from (x_min, y_min). `s` wraps modulo the perimeter.
Position perimeter_point(const ZoneRect& rect, double s, double z);

/// Arc length (counterclockwise from (x_min, y_min)) of the perimeter point
/// closest to `pos`.
double nearest_perimeter_arc(const ZoneRect& rect, const Position& pos);

double horizontal_distance(const Position& a, const Position& b);
double distance_3d(const Position& a, const Position& b);

}  // namespace uavsim
