#include "uavsim/scenario.hpp"

#include <charconv>
#include <cmath>

namespace uavsim {

std::string_view scenario_name(ScenarioId id) {
  switch (id) {
    case ScenarioId::Terrestrial: return "terrestrial";
    case ScenarioId::LeoOutage: return "leo";
    case ScenarioId::LeoOutageFallback: return "leo-fallback";
    case ScenarioId::StressNoFallback: return "stress";
    case ScenarioId::StressFallback: return "stress-fallback";
  }
  return "unknown";
}

ScenarioId parse_scenario_id(std::string_view name) {
  for (const auto& spec : scenario_catalogue()) {
    if (scenario_name(spec.id) == name) return spec.id;
  }
  throw ConfigError("scenario: unknown scenario '" + std::string(name) + "'");
}

ScenarioSpec scenario_spec(ScenarioId id) {
  ScenarioSpec s;
  s.id = id;
  s.label = std::string(scenario_name(id));
  switch (id) {
    case ScenarioId::Terrestrial:
      break;
    case ScenarioId::LeoOutage:
    case ScenarioId::LeoOutageFallback:
      s.all_gnb_backhaul = Backhaul::LeoSatellite;
      s.outage_rate_hz = 0.02;
      s.outage_duration_s = 5.0;
      s.fallback_enabled = id == ScenarioId::LeoOutageFallback;
      break;
    case ScenarioId::StressNoFallback:
    case ScenarioId::StressFallback:
      s.all_gnb_backhaul = Backhaul::LeoSatellite;
      s.outage_rate_hz = 0.05;
      s.outage_duration_s = 10.0;
      s.fallback_enabled = id == ScenarioId::StressFallback;
      break;
  }
  return s;
}

const std::vector<ScenarioSpec>& scenario_catalogue() {
  static const std::vector<ScenarioSpec> catalogue = {
      scenario_spec(ScenarioId::Terrestrial),
      scenario_spec(ScenarioId::LeoOutage),
      scenario_spec(ScenarioId::LeoOutageFallback),
      scenario_spec(ScenarioId::StressNoFallback),
      scenario_spec(ScenarioId::StressFallback),
  };
  return catalogue;
}

int RunConfig::steps() const {
  return static_cast<int>(std::llround(sim_time_s / dt_s));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::uint64_t derive_seed(std::string_view scenario_id, double speed_mps,
                          double altitude_m, int rep) {
  std::string key(scenario_id);
  key += '|';
  key += format_number(speed_mps);
  key += '|';
  key += format_number(altitude_m);
  key += '|';
  key += std::to_string(rep);
  return fnv1a64(key);
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError(field + ": " + what);
}

bool is_step_multiple(double v, double dt) {
  const double k = v / dt;
  return std::abs(k - std::round(k)) < 1e-9;
}

void check_finite(const Position& p, const std::string& field) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
    fail(field, "coordinates must be finite");
  }
  if (p.z < 0.0) fail(field + ".z", "must be >= 0");
}

void check_zone(const ZoneRect& z, const std::string& field) {
  if (!(z.x_min < z.x_max)) fail(field, "x_min must be < x_max");
  if (!(z.y_min < z.y_max)) fail(field, "y_min must be < y_max");
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (!(cfg.dt_s > 0.0)) fail("dt_s", "must be > 0");
  if (!(cfg.sim_time_s > 0.0)) fail("sim_time_s", "must be > 0");
  if (!is_step_multiple(cfg.sim_time_s, cfg.dt_s)) {
    fail("sim_time_s", "must be an integer multiple of dt_s");
  }
  if (!(cfg.carrier_hz > 0.0)) fail("carrier_hz", "must be > 0");
  if (!(cfg.uav_speed_mps > 0.0)) fail("uav_speed_mps", "must be > 0");
  if (!(cfg.uav_altitude_m > 0.0)) fail("uav_altitude_m", "must be > 0");
  if (cfg.rep < 0) fail("rep", "must be >= 0");

  const auto& w = cfg.world;
  check_zone(w.corridor, "world.corridor");
  for (std::size_t i = 0; i < w.nfzs.size(); ++i) {
    check_zone(w.nfzs[i], "world.nfzs[" + std::to_string(i) + "]");
  }
  if (w.gnbs.empty()) fail("world.gnbs", "at least one gNB is required");
  for (std::size_t i = 0; i < w.gnbs.size(); ++i) {
    const std::string f = "world.gnbs[" + std::to_string(i) + "]";
    if (w.gnbs[i].id != static_cast<int>(i)) {
      fail(f + ".id", "ids must be contiguous from 0 in order");
    }
    check_finite(w.gnbs[i].position, f + ".position");
  }

  const auto& ho = cfg.handover;
  if (ho.hysteresis_db < 0.0) fail("handover.hysteresis_db", "must be >= 0");
  if (!(ho.ttt_s > 0.0)) fail("handover.ttt_s", "must be > 0");
  if (!is_step_multiple(ho.ttt_s, cfg.dt_s)) {
    fail("handover.ttt_s", "must be an integer multiple of dt_s");
  }

  const auto& d = cfg.detection;
  if (!(d.window_s > 0.0) || !is_step_multiple(d.window_s, cfg.dt_s)) {
    fail("detection.window_s", "must be a positive multiple of dt_s");
  }
  if (!(d.persistence_s > 0.0) || !is_step_multiple(d.persistence_s, cfg.dt_s)) {
    fail("detection.persistence_s", "must be a positive multiple of dt_s");
  }
  if (d.ho_count_threshold < 1) fail("detection.ho_count_threshold", "must be > 0");
  if (!(d.rsrp_var_threshold_db2 > 0.0)) {
    fail("detection.rsrp_var_threshold_db2", "must be > 0");
  }
  if (!(d.strong_delta_db > 0.0)) fail("detection.strong_delta_db", "must be > 0");
  if (d.strong_count_threshold < 1) {
    fail("detection.strong_count_threshold", "must be > 0");
  }

  const auto& b = cfg.backhaul;
  if (b.latency_mean_s < 0.0) fail("backhaul.latency_mean_s", "must be >= 0");
  if (b.latency_jitter_s < 0.0) fail("backhaul.latency_jitter_s", "must be >= 0");
  if (b.outage_rate_hz < 0.0) fail("backhaul.outage_rate_hz", "must be >= 0");
  if (!(b.outage_duration_s > 0.0)) fail("backhaul.outage_duration_s", "must be > 0");
  if (!(b.fallback_deadline_s > 0.0)) {
    fail("backhaul.fallback_deadline_s", "must be > 0");
  }

  const auto& m = cfg.mobility;
  if (!(m.patrol_speed_mps > 0.0)) fail("mobility.patrol_speed_mps", "must be > 0");
  if (!(m.uav_loiter_half_length_m > 0.0)) {
    fail("mobility.uav_loiter_half_length_m", "must be > 0");
  }
  if (!(m.uav_loiter_half_width_m > 0.0)) {
    fail("mobility.uav_loiter_half_width_m", "must be > 0");
  }
  if (in_zone(m.uav_ingress_start, w.corridor)) {
    fail("mobility.uav_ingress_start", "must lie outside the corridor");
  }
  const ZoneRect track = loiter_rect(m);
  if (track.x_min < w.corridor.x_min || track.x_max > w.corridor.x_max ||
      track.y_min < w.corridor.y_min || track.y_max > w.corridor.y_max) {
    fail("mobility.uav_loiter_center", "racetrack must lie inside the corridor");
  }

  const auto& r = cfg.radio;
  if (r.shadowing_sigma_db < 0.0) fail("radio.shadowing_sigma_db", "must be >= 0");
  if (r.aerial_penalty_db < 0.0) fail("radio.aerial_penalty_db", "must be >= 0");
  if (r.ground_penalty_db < 0.0) fail("radio.ground_penalty_db", "must be >= 0");
  if (r.interference_radius_m < 0.0) {
    fail("radio.interference_radius_m", "must be >= 0");
  }
  if (r.interference_db_post_lock < 0.0) {
    fail("radio.interference_db_post_lock", "must be >= 0");
  }
  if (r.interference_db_pre_lock < r.interference_db_post_lock) {
    fail("radio.interference_db_pre_lock", "must be >= interference_db_post_lock");
  }

  const auto& s = cfg.scenario;
  if (s.id == ScenarioId::Terrestrial && s.outage_rate_hz != 0.0) {
    fail("scenario.outage_rate_hz", "must be 0 for the terrestrial scenario");
  }
}

RunConfig make_run_config(const ScenarioSpec& scenario, double speed_mps,
                          double altitude_m, int rep,
                          const nlohmann::json& overrides) {
  if (!overrides.is_object()) fail("<root>", "overrides must be a JSON object");

  RunConfig cfg;
  cfg.scenario = scenario;
  cfg.uav_speed_mps = speed_mps;
  cfg.uav_altitude_m = altitude_m;
  cfg.rep = rep;

  // Scenario fields feed the world and backhaul defaults, so they go first.
  if (overrides.contains("scenario")) {
    cfg = apply_overlay(cfg, {{"scenario", overrides.at("scenario")}});
  }
  cfg.world = default_world();
  for (auto& g : cfg.world.gnbs) g.backhaul = cfg.scenario.all_gnb_backhaul;
  cfg.backhaul.kind = cfg.scenario.all_gnb_backhaul;
  cfg.backhaul.outage_rate_hz = cfg.scenario.outage_rate_hz;
  cfg.backhaul.outage_duration_s = cfg.scenario.outage_duration_s;
  cfg.backhaul.fallback_enabled = cfg.scenario.fallback_enabled;
  cfg.backhaul.fallback_deadline_s = cfg.scenario.fallback_deadline_s;

  cfg = apply_overlay(cfg, overrides);
  if (!overrides.contains("seed")) {
    cfg.seed = derive_seed(scenario_name(cfg.scenario.id), cfg.uav_speed_mps,
                           cfg.uav_altitude_m, cfg.rep);
  }
  validate(cfg);
  return cfg;
}

}  // namespace uavsim
