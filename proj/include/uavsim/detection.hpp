#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "uavsim/handover.hpp"
#include "uavsim/radio.hpp"

namespace uavsim {

struct DetectionConfig {
  double window_s = 20.0;
  int ho_count_threshold = 3;
  double rsrp_var_threshold_db2 = 18.0;
  double strong_delta_db = 6.0;
  int strong_count_threshold = 3;
  double persistence_s = 3.0;

  bool operator==(const DetectionConfig&) const = default;
};

/// Sliding-window detector state for one UE. The window covers (t - window_s, t].
class DetectionState {
 public:
  DetectionState(const DetectionConfig& cfg, double dt, bool whitelisted);

  bool whitelisted() const { return whitelisted_; }
  std::optional<double> detected_at_s() const { return detected_at_s_; }
  double persistence_accum_s() const { return persistence_accum_s_; }
  std::span<const double> rsrp_window() const { return rsrp_window_; }
  const std::deque<double>& ho_times() const { return ho_times_; }
  std::size_t capacity() const { return capacity_; }

 private:
  friend std::optional<double> step_detect(DetectionState&, const RadioSample&,
                                           int, const std::optional<HoEvent>&,
                                           double, double,
                                           const DetectionConfig&);

  std::size_t capacity_;
  bool whitelisted_;
  std::vector<double> rsrp_window_;
  std::deque<double> ho_times_;
  double persistence_accum_s_ = 0.0;
  std::optional<double> detected_at_s_;
};

/// Cells (best one included) whose RSRP is within `delta_db` of the best.
int strong_cell_count(const RadioSample& sample, double delta_db);

/// Population variance (divide by n).
double window_variance(std::span<const double> values);

/// One detector step. Returns `t` if detection fires at this step. Must not
/// be called again once it has fired.
std::optional<double> step_detect(DetectionState& state,
                                  const RadioSample& sample, int serving_id,
                                  const std::optional<HoEvent>& new_ho,
                                  double t, double dt,
                                  const DetectionConfig& cfg);

}  // namespace uavsim
