#include "uavsim/radio.hpp"

#include <algorithm>
#include <cmath>

namespace uavsim {

double fspl_db(double distance_m, double carrier_hz) {
  const double d_km = std::max(distance_m, 1.0) / 1000.0;
  const double f_mhz = carrier_hz / 1.0e6;
  return 32.44 + 20.0 * std::log10(d_km) + 20.0 * std::log10(f_mhz);
}

double rsrp_dbm(const GnbSite& gnb, const Position& ue_pos, bool ue_is_aerial,
                double shadow_db, double carrier_hz, const RadioConfig& cfg) {
  const double penalty =
      ue_is_aerial ? cfg.aerial_penalty_db : cfg.ground_penalty_db;
  return gnb.tx_power_dbm -
         fspl_db(distance_3d(gnb.position, ue_pos), carrier_hz) - penalty +
         shadow_db;
}

RadioSample sample_all(const Position& ue_pos, bool ue_is_aerial,
                       const WorldGeometry& world, double carrier_hz, Rng& rng,
                       const RadioConfig& cfg) {
  RadioSample sample;
  sample.rsrp_dbm.reserve(world.gnbs.size());
  for (const auto& gnb : world.gnbs) {
    const double shadow = rng.normal(0.0, cfg.shadowing_sigma_db);
    sample.rsrp_dbm.push_back(
        rsrp_dbm(gnb, ue_pos, ue_is_aerial, shadow, carrier_hz, cfg));
  }
  return sample;
}

double patrol_effective_rsrp(const RadioSample& sample, int serving_id,
                             const Position& uav_pos, bool uav_locked,
                             const WorldGeometry& world,
                             const RadioConfig& cfg) {
  const auto idx = static_cast<std::size_t>(serving_id);
  const double raw = sample[idx];
  if (horizontal_distance(uav_pos, world.gnbs[idx].position) >
      cfg.interference_radius_m) {
    return raw;
  }
  return raw - (uav_locked ? cfg.interference_db_post_lock
                           : cfg.interference_db_pre_lock);
}

}  // namespace uavsim
