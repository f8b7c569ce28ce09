#include "uavsim/reference.hpp"

#include <algorithm>
#include <cmath>

namespace uavsim::reference {

std::vector<HoEvent> a3_handovers(const std::vector<RadioSample>& trace,
                                  double dt, const HandoverConfig& cfg) {
  std::vector<HoEvent> events;
  if (trace.empty()) return events;

  std::size_t serving = 0;
  for (std::size_t n = 1; n < trace[0].size(); ++n) {
    if (trace[0][n] > trace[0][serving]) serving = n;
  }
  long last_ho = -1;

  for (long k = 0; k < static_cast<long>(trace.size()); ++k) {
    const auto& now = trace[static_cast<std::size_t>(k)];
    long target = -1;
    for (std::size_t n = 0; n < now.size(); ++n) {
      if (n == serving) continue;
      long run = 0;
      for (long j = k; j > last_ho; --j) {
        const auto& s = trace[static_cast<std::size_t>(j)];
        if (s[n] > s[serving] + cfg.a3_offset_db + cfg.hysteresis_db) {
          ++run;
        } else {
          break;
        }
      }
      const bool triggered =
          run > 0 && static_cast<double>(run) * dt + kTimeEps >= cfg.ttt_s;
      if (triggered &&
          (target < 0 || now[n] > now[static_cast<std::size_t>(target)])) {
        target = static_cast<long>(n);
      }
    }
    if (target >= 0) {
      events.push_back({static_cast<double>(k) * dt, static_cast<int>(serving),
                        static_cast<int>(target)});
      serving = static_cast<std::size_t>(target);
      last_ho = k;
    }
  }
  return events;
}

std::optional<double> detection_time(const std::vector<RadioSample>& samples,
                                     const std::vector<int>& serving,
                                     const std::vector<HoEvent>& hos,
                                     double dt, const DetectionConfig& cfg) {
  const long window_steps = std::lround(cfg.window_s / dt);
  const long persist_steps = std::lround(cfg.persistence_s / dt);
  const long n = static_cast<long>(samples.size());

  auto condition = [&](long k) {
    const double t = static_cast<double>(k) * dt;
    long ho_count = 0;
    for (const auto& ev : hos) {
      if (ev.time_s > t - cfg.window_s + kTimeEps && ev.time_s <= t + kTimeEps) {
        ++ho_count;
      }
    }
    const long first = std::max(0L, k - window_steps + 1);
    double sum = 0.0;
    for (long j = first; j <= k; ++j) {
      sum += samples[static_cast<std::size_t>(j)]
                    [static_cast<std::size_t>(serving[static_cast<std::size_t>(j)])];
    }
    const double mean = sum / static_cast<double>(k - first + 1);
    double ss = 0.0;
    for (long j = first; j <= k; ++j) {
      const double v =
          samples[static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(serving[static_cast<std::size_t>(j)])];
      ss += (v - mean) * (v - mean);
    }
    const double variance = ss / static_cast<double>(k - first + 1);

    const auto& now = samples[static_cast<std::size_t>(k)];
    double best = now[0];
    for (std::size_t c = 1; c < now.size(); ++c) best = std::max(best, now[c]);
    long strong = 0;
    for (std::size_t c = 0; c < now.size(); ++c) {
      if (now[c] >= best - cfg.strong_delta_db) ++strong;
    }
    return ho_count >= cfg.ho_count_threshold ||
           (variance >= cfg.rsrp_var_threshold_db2 &&
            strong >= cfg.strong_count_threshold);
  };

  for (long k = 0; k < n; ++k) {
    long run = 0;
    for (long j = k; j >= 0 && run < persist_steps && condition(j); --j) ++run;
    if (run >= persist_steps) return static_cast<double>(k) * dt;
  }
  return std::nullopt;
}

std::vector<RadioSample> random_trace(Rng& rng, int steps, int cells) {
  std::vector<double> mean(static_cast<std::size_t>(cells), -80.0);
  std::vector<RadioSample> trace;
  trace.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    RadioSample s;
    for (auto& m : mean) {
      m += rng.normal(0.0, 1.5);
      m = std::clamp(m, -95.0, -65.0);
      s.rsrp_dbm.push_back(m + rng.normal(0.0, 3.0));
    }
    trace.push_back(std::move(s));
  }
  return trace;
}

}  // namespace uavsim::reference
