#include "uavsim/detection.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace uavsim {

DetectionState::DetectionState(const DetectionConfig& cfg, double dt,
                               bool whitelisted)
    : capacity_(static_cast<std::size_t>(std::llround(cfg.window_s / dt))),
      whitelisted_(whitelisted) {
  rsrp_window_.reserve(capacity_);
}

int strong_cell_count(const RadioSample& sample, double delta_db) {
  const double best =
      *std::max_element(sample.rsrp_dbm.begin(), sample.rsrp_dbm.end());
  return static_cast<int>(std::count_if(
      sample.rsrp_dbm.begin(), sample.rsrp_dbm.end(),
      [&](double v) { return v >= best - delta_db; }));
}

double window_variance(std::span<const double> values) {
  const auto n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / n;
}

std::optional<double> step_detect(DetectionState& state,
                                  const RadioSample& sample, int serving_id,
                                  const std::optional<HoEvent>& new_ho,
                                  double t, double dt,
                                  const DetectionConfig& cfg) {
  assert(!state.detected_at_s_ && "step_detect called after detection fired");

  if (state.rsrp_window_.size() == state.capacity_) {
    state.rsrp_window_.erase(state.rsrp_window_.begin());
  }
  state.rsrp_window_.push_back(sample[static_cast<std::size_t>(serving_id)]);

  if (new_ho) state.ho_times_.push_back(new_ho->time_s);
  while (!state.ho_times_.empty() &&
         state.ho_times_.front() <= t - cfg.window_s + kTimeEps) {
    state.ho_times_.pop_front();
  }

  bool condition = false;
  if (!state.whitelisted_) {
    const bool ho_branch =
        static_cast<int>(state.ho_times_.size()) >= cfg.ho_count_threshold;
    const bool variance_branch =
        window_variance(state.rsrp_window_) >= cfg.rsrp_var_threshold_db2 &&
        strong_cell_count(sample, cfg.strong_delta_db) >=
            cfg.strong_count_threshold;
    condition = ho_branch || variance_branch;
  }

  state.persistence_accum_s_ =
      condition ? std::min(state.persistence_accum_s_ + dt, cfg.persistence_s)
                : 0.0;
  if (condition && state.persistence_accum_s_ + kTimeEps >= cfg.persistence_s) {
    state.detected_at_s_ = t;
    return t;
  }
  return std::nullopt;
}

}  // namespace uavsim
