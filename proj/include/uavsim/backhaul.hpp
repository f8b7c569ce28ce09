#pragma once

#include <optional>
#include <vector>

#include "uavsim/geometry.hpp"
#include "uavsim/rng.hpp"

namespace uavsim {

struct BackhaulConfig {
  Backhaul kind = Backhaul::Terrestrial;
  double latency_mean_s = 0.030;
  double latency_jitter_s = 0.010;
  double outage_rate_hz = 0.0;
  double outage_duration_s = 5.0;
  bool fallback_enabled = false;
  double fallback_deadline_s = 2.0;

  bool operator==(const BackhaulConfig&) const = default;
};

/// Outage interval. Neither endpoint blocks: the path is down strictly
/// between start and end, and the end instant is usable again.
struct Interval {
  double start_s = 0.0;
  double end_s = 0.0;

  double length() const { return end_s - start_s; }
  bool operator==(const Interval&) const = default;
};

/// Sorted, disjoint, merged outage intervals.
struct OutageSchedule {
  std::vector<Interval> intervals;

  bool operator==(const OutageSchedule&) const = default;
};

enum class MitigationPath { Immediate, Remote, Fallback };

struct CommandOutcome {
  double t_issue_s = 0.0;
  double t_apply_s = 0.0;
  MitigationPath path = MitigationPath::Immediate;

  double delay_s() const { return t_apply_s - t_issue_s; }
  bool operator==(const CommandOutcome&) const = default;
};

/// Poisson arrival instants on [0, horizon] by exponential inter-arrival
/// sampling. Rate 0 draws nothing.
std::vector<double> gen_outage_arrivals(Rng& rng, double rate_hz,
                                        double horizon_s);

/// One interval of `duration_s` per arrival, overlaps merged into their union.
OutageSchedule merge_outages(std::vector<double> arrivals, double duration_s);

/// Re-merges an arbitrary interval list (idempotent on merged schedules).
OutageSchedule merge_intervals(std::vector<Interval> intervals);

OutageSchedule gen_outages(Rng& rng, double rate_hz, double duration_s,
                           double horizon_s);

/// True iff start < t < end for some interval.
bool in_outage(const OutageSchedule& schedule, double t);

/// Interval containing t under the in_outage rule.
std::optional<Interval> covering_interval(const OutageSchedule& schedule,
                                          double t);

/// Gaussian one-way latency, clamped below at 1 ms.
double sample_latency(Rng& rng, const BackhaulConfig& cfg);

inline constexpr double kMinLatencyS = 0.001;

CommandOutcome command_apply_time(double t_issue, const BackhaulConfig& cfg,
                                  const OutageSchedule& schedule,
                                  double latency);

}  // namespace uavsim
