#include "uavsim/handover.hpp"

#include <algorithm>

namespace uavsim {

namespace {

int strongest(const RadioSample& sample) {
  // max_element returns the first maximum, i.e. the lowest id on ties.
  const auto it =
      std::max_element(sample.rsrp_dbm.begin(), sample.rsrp_dbm.end());
  return static_cast<int>(it - sample.rsrp_dbm.begin());
}

}  // namespace

HandoverState init_serving(const RadioSample& sample) {
  HandoverState state;
  state.serving_id = strongest(sample);
  state.ttt_accum_s.assign(sample.size(), 0.0);
  return state;
}

std::optional<HoEvent> step_a3(HandoverState& state, const RadioSample& sample,
                               double t, double dt, const HandoverConfig& cfg) {
  if (state.locked) return std::nullopt;

  const auto serving = static_cast<std::size_t>(state.serving_id);
  const double threshold =
      sample[serving] + cfg.a3_offset_db + cfg.hysteresis_db;

  int target = -1;
  for (std::size_t n = 0; n < sample.size(); ++n) {
    if (n == serving) continue;
    if (sample[n] > threshold) {
      state.ttt_accum_s[n] = std::min(state.ttt_accum_s[n] + dt, cfg.ttt_s);
      if (state.ttt_accum_s[n] + kTimeEps >= cfg.ttt_s &&
          (target < 0 || sample[n] > sample[static_cast<std::size_t>(target)])) {
        target = static_cast<int>(n);
      }
    } else {
      state.ttt_accum_s[n] = 0.0;
    }
  }
  if (target < 0) return std::nullopt;

  const HoEvent ev{t, state.serving_id, target};
  state.serving_id = target;
  std::fill(state.ttt_accum_s.begin(), state.ttt_accum_s.end(), 0.0);
  state.ho_log.push_back(ev);
  return ev;
}

void lock(HandoverState& state) { state.locked = true; }

}  // namespace uavsim
