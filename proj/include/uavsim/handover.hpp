#pragma once

#include <optional>
#include <vector>

#include "uavsim/radio.hpp"

namespace uavsim {

/// Slack for comparing accumulated seconds against step-grid thresholds.
inline constexpr double kTimeEps = 1e-9;

struct HandoverConfig {
  double hysteresis_db = 3.0;
  double a3_offset_db = 0.0;
  double ttt_s = 1.5;

  bool operator==(const HandoverConfig&) const = default;
};

struct HoEvent {
  double time_s = 0.0;
  int from_id = 0;
  int to_id = 0;

  bool operator==(const HoEvent&) const = default;
};

/// Event-A3 state for one UE. `ttt_accum_s[n]` is how long neighbor n has
/// continuously satisfied the entry condition against the current server.
struct HandoverState {
  int serving_id = 0;
  std::vector<double> ttt_accum_s;
  bool locked = false;
  std::vector<HoEvent> ho_log;
};

/// Serving cell = strongest cell, lowest id on ties.
HandoverState init_serving(const RadioSample& sample);

/// Advances the A3 machine by one step. Returns the handover executed at
/// time `t`, if any. A locked state never changes.
std::optional<HoEvent> step_a3(HandoverState& state, const RadioSample& sample,
                               double t, double dt, const HandoverConfig& cfg);

/// Pins the UE to its current serving cell. Idempotent.
void lock(HandoverState& state);

}  // namespace uavsim
