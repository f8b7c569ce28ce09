#pragma once

// Serial, history-scanning reference implementations of the incremental
// state machines. Slow on purpose; used by tests and the `check` command.

#include <optional>
#include <vector>

#include "uavsim/detection.hpp"
#include "uavsim/handover.hpp"
#include "uavsim/radio.hpp"
#include "uavsim/rng.hpp"

namespace uavsim::reference {

/// Replays a full RSRP trace through Event A3, re-deriving the time-to-trigger
/// condition at every step by scanning back over the trace since the last
/// handover. Step k happens at time k * dt.
std::vector<HoEvent> a3_handovers(const std::vector<RadioSample>& trace,
                                  double dt, const HandoverConfig& cfg);

/// First step time at which the detector fires, recomputing handover count,
/// serving-cell variance and strong-cell count from the whole history.
std::optional<double> detection_time(const std::vector<RadioSample>& samples,
                                     const std::vector<int>& serving,
                                     const std::vector<HoEvent>& hos,
                                     double dt, const DetectionConfig& cfg);

/// Synthetic RSRP trace: per-cell random-walk means around -80 dBm plus
/// i.i.d. noise, tuned so that A3 handovers are frequent.
std::vector<RadioSample> random_trace(Rng& rng, int steps, int cells);

}  // namespace uavsim::reference
