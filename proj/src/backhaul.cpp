#include "uavsim/backhaul.hpp"

#include <algorithm>

namespace uavsim {

std::vector<double> gen_outage_arrivals(Rng& rng, double rate_hz,
                                        double horizon_s) {
  std::vector<double> arrivals;
  if (rate_hz <= 0.0) return arrivals;
  double t = 0.0;
  while (true) {
    t += rng.exponential(rate_hz);
    if (t > horizon_s) break;
    arrivals.push_back(t);
  }
  return arrivals;
}

OutageSchedule merge_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.start_s < b.start_s;
            });
  OutageSchedule out;
  for (const auto& iv : intervals) {
    if (!out.intervals.empty() && iv.start_s < out.intervals.back().end_s) {
      auto& last = out.intervals.back();
      last.end_s = std::max(last.end_s, iv.end_s);
    } else {
      out.intervals.push_back(iv);
    }
  }
  return out;
}

OutageSchedule merge_outages(std::vector<double> arrivals, double duration_s) {
  std::vector<Interval> raw;
  raw.reserve(arrivals.size());
  for (double a : arrivals) raw.push_back({a, a + duration_s});
  return merge_intervals(std::move(raw));
}

OutageSchedule gen_outages(Rng& rng, double rate_hz, double duration_s,
                           double horizon_s) {
  return merge_outages(gen_outage_arrivals(rng, rate_hz, horizon_s),
                       duration_s);
}

std::optional<Interval> covering_interval(const OutageSchedule& schedule,
                                          double t) {
  // First interval ending after t; it covers t iff it started before t.
  const auto it = std::upper_bound(
      schedule.intervals.begin(), schedule.intervals.end(), t,
      [](double v, const Interval& iv) { return v < iv.end_s; });
  if (it != schedule.intervals.end() && it->start_s < t) return *it;
  return std::nullopt;
}

bool in_outage(const OutageSchedule& schedule, double t) {
  return covering_interval(schedule, t).has_value();
}

double sample_latency(Rng& rng, const BackhaulConfig& cfg) {
  return std::max(rng.normal(cfg.latency_mean_s, cfg.latency_jitter_s),
                  kMinLatencyS);
}

CommandOutcome command_apply_time(double t_issue, const BackhaulConfig& cfg,
                                  const OutageSchedule& schedule,
                                  double latency) {
  if (cfg.kind == Backhaul::Terrestrial) {
    return {t_issue, t_issue, MitigationPath::Immediate};
  }
  const double nominal = t_issue + latency;
  const auto blocking = covering_interval(schedule, nominal);
  const double remote = blocking ? blocking->end_s : nominal;
  const double deadline = t_issue + cfg.fallback_deadline_s;
  if (cfg.fallback_enabled && remote > deadline) {
    return {t_issue, deadline, MitigationPath::Fallback};
  }
  return {t_issue, remote, MitigationPath::Remote};
}

}  // namespace uavsim
