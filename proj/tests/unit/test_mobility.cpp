#include <doctest.h>

#include <cmath>

#include "uavsim/mobility.hpp"

using namespace uavsim;

namespace {

bool near(const Position& a, const Position& b, double tol = 1e-9) {
  return std::abs(a.x - b.x) < tol && std::abs(a.y - b.y) < tol &&
         std::abs(a.z - b.z) < tol;
}

const double kGridSpeeds[] = {6, 9, 12, 15, 18};

}  // namespace

TEST_CASE("patrol walks the corridor perimeter") {
  const auto w = default_world();
  const MobilityConfig m;
  CHECK(near(patrol_position(0, w, m), {0, 0, 1.5}));
  const double period = w.corridor.perimeter() / m.patrol_speed_mps;
  CHECK(period == doctest::Approx(960.0));
  CHECK(near(patrol_position(period, w, m), {0, 0, 1.5}));
  CHECK(near(patrol_position(100, w, m), {500, 0, 1.5}));
  // 2000 m east then 100 m north
  CHECK(near(patrol_position(420, w, m), {2000, 100, 1.5}));
}

TEST_CASE("UAV ingress then racetrack") {
  const auto w = default_world();
  const MobilityConfig m;
  const ZoneRect track = loiter_rect(m);
  CHECK(track == ZoneRect{960, 1040, 130, 170});

  // Nearest racetrack point to (1000,-100) is (1000,130), 230 m north.
  CHECK(uav_ingress_duration(10, m) == doctest::Approx(23.0));
  CHECK(near(uav_position(0, 10, 90, w, m), {1000, -100, 90}));
  CHECK(near(uav_position(23.0, 10, 90, w, m), {1000, 130, 90}));
  CHECK(near(uav_position(11.5, 10, 90, w, m), {1000, 15, 90}));
  // after entry the lap runs east along the bottom edge
  CHECK(near(uav_position(25.0, 10, 90, w, m), {1020, 130, 90}));
  CHECK(near(uav_position(28.0, 10, 90, w, m), {1040, 140, 90}));

  for (double v : kGridSpeeds) {
    const double t0 = uav_ingress_duration(v, m) + 3.3;
    const double lap = track.perimeter() / v;
    CHECK(near(uav_position(t0, v, 60, w, m), uav_position(t0 + lap, v, 60, w, m), 1e-6));
  }
}

TEST_CASE("UAV completes at least two racetrack laps at every grid speed") {
  const MobilityConfig m;
  const double perimeter = loiter_rect(m).perimeter();
  for (double v : kGridSpeeds) {
    const double loiter_time = 200.0 - uav_ingress_duration(v, m);
    CHECK(loiter_time * v / perimeter >= 2.0);
  }
}

TEST_CASE("UAV keeps altitude and moves at constant speed") {
  const auto w = default_world();
  const MobilityConfig m;
  const double dt = 0.5;
  for (double v : kGridSpeeds) {
    int short_steps = 0;
    Position prev = uav_position(0, v, 150, w, m);
    for (int k = 1; k <= 400; ++k) {
      const Position p = uav_position(k * dt, v, 150, w, m);
      REQUIRE(p.z == 150.0);
      const double d = distance_3d(prev, p);
      // Exact on straight segments; across a right-angle vertex the chord
      // lies between v*dt/sqrt(2) and v*dt.
      CHECK(d <= v * dt + 1e-9);
      CHECK(d >= v * dt / std::sqrt(2.0) - 1e-9);
      if (d < v * dt - 1e-9) ++short_steps;
      prev = p;
    }
    // at most one shortened step per vertex passed (entry + 4 per lap)
    const double laps = (200.0 * v - 230.0) / 240.0;
    CHECK(short_steps <= 1 + 4 * static_cast<int>(std::ceil(laps)));
  }
}

TEST_CASE("pose flags") {
  const auto w = default_world();
  const MobilityConfig m;
  auto p = pose({1000, 200, 100}, w);
  CHECK(p.in_corridor);
  CHECK_FALSE(p.in_nfz);
  const auto& nfz = w.nfzs.at(0);
  p = pose({(nfz.x_min + nfz.x_max) / 2, (nfz.y_min + nfz.y_max) / 2, 100}, w);
  CHECK(p.in_corridor);
  CHECK(p.in_nfz);
  p = pose(m.uav_ingress_start, w);
  CHECK_FALSE(p.in_corridor);
  CHECK_FALSE(p.in_nfz);
}
