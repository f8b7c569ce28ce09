#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavsim/backhaul.hpp"
#include "uavsim/handover.hpp"
#include "uavsim/radio.hpp"
#include "uavsim/scenario.hpp"

namespace uavsim {

/// Per-run KPIs plus detection metadata; one row of runs.csv.
struct KpiRecord {
  std::string scenario;
  double uav_speed_mps = 0.0;
  double uav_altitude_m = 0.0;
  int rep = 0;
  std::uint64_t seed = 0;
  bool detected = false;
  std::optional<double> t_detect_s;
  std::optional<double> t_apply_s;
  std::optional<double> delay_s;
  std::optional<MitigationPath> path;
  int extra_handovers = 0;
  double patrol_ho_rate_per_min = 0.0;
  double dwell_before_lock_s = 0.0;
  int nfz_violation_steps = 0;
  int uav_total_hos = 0;
  int patrol_total_hos = 0;

  bool operator==(const KpiRecord&) const = default;
};

/// What the UAV side of the RAN observed each step; input to the
/// reference detector.
struct RunTrace {
  std::vector<RadioSample> uav_samples;
  std::vector<int> uav_serving;  // after that step's handover decision
  std::vector<HoEvent> uav_hos;
  std::vector<HoEvent> patrol_hos;
  std::optional<CommandOutcome> command;
  std::optional<double> command_latency_s;
  OutageSchedule outages;
};

KpiRecord simulate(const RunConfig& config);

/// Same run, also returning the per-step UAV observations.
KpiRecord simulate_traced(const RunConfig& config, RunTrace& trace);

}  // namespace uavsim
