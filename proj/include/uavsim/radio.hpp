#pragma once

#include <vector>

#include "uavsim/geometry.hpp"
#include "uavsim/rng.hpp"

namespace uavsim {

struct RadioConfig {
  double shadowing_sigma_db = 6.0;
  double aerial_penalty_db = 5.0;
  double ground_penalty_db = 0.0;
  double interference_radius_m = 300.0;
  double interference_db_pre_lock = 3.0;
  double interference_db_post_lock = 1.0;

  bool operator==(const RadioConfig&) const = default;
};

/// Raw per-cell RSRP for one UE at one step, indexed by gNB id.
struct RadioSample {
  std::vector<double> rsrp_dbm;

  std::size_t size() const { return rsrp_dbm.size(); }
  double operator[](std::size_t i) const { return rsrp_dbm[i]; }

  bool operator==(const RadioSample&) const = default;
};

/// Free-space path loss, 32.44 + 20 log10(d_km) + 20 log10(f_MHz).
/// Distances below 1 m are clamped to 1 m.
double fspl_db(double distance_m, double carrier_hz);

double rsrp_dbm(const GnbSite& gnb, const Position& ue_pos, bool ue_is_aerial,
                double shadow_db, double carrier_hz, const RadioConfig& cfg);

/// Draws one N(0, sigma^2) shadowing term per gNB, in id order.
RadioSample sample_all(const Position& ue_pos, bool ue_is_aerial,
                       const WorldGeometry& world, double carrier_hz, Rng& rng,
                       const RadioConfig& cfg);

/// Serving-cell RSRP seen by the patrol terminal after UAV interference.
double patrol_effective_rsrp(const RadioSample& sample, int serving_id,
                             const Position& uav_pos, bool uav_locked,
                             const WorldGeometry& world, const RadioConfig& cfg);

}  // namespace uavsim
