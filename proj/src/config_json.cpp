#include <string>

#include "uavsim/scenario.hpp"

namespace uavsim {

using nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(Backhaul, {
    {Backhaul::Terrestrial, "terrestrial"},
    {Backhaul::LeoSatellite, "leo_satellite"},
})

NLOHMANN_JSON_SERIALIZE_ENUM(ScenarioId, {
    {ScenarioId::Terrestrial, "terrestrial"},
    {ScenarioId::LeoOutage, "leo"},
    {ScenarioId::LeoOutageFallback, "leo-fallback"},
    {ScenarioId::StressNoFallback, "stress"},
    {ScenarioId::StressFallback, "stress-fallback"},
})

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Position, x, y, z)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ZoneRect, x_min, x_max, y_min, y_max)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GnbSite, id, position, tx_power_dbm, backhaul)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(WorldGeometry, corridor, nfzs, gnbs)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScenarioSpec, id, label, all_gnb_backhaul,
                                   outage_rate_hz, outage_duration_s,
                                   fallback_enabled, fallback_deadline_s)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HandoverConfig, hysteresis_db, a3_offset_db,
                                   ttt_s)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DetectionConfig, window_s,
                                   ho_count_threshold, rsrp_var_threshold_db2,
                                   strong_delta_db, strong_count_threshold,
                                   persistence_s)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BackhaulConfig, kind, latency_mean_s,
                                   latency_jitter_s, outage_rate_hz,
                                   outage_duration_s, fallback_enabled,
                                   fallback_deadline_s)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MobilityConfig, patrol_speed_mps,
                                   uav_ingress_start, uav_loiter_center,
                                   uav_loiter_half_length_m,
                                   uav_loiter_half_width_m)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RadioConfig, shadowing_sigma_db,
                                   aerial_penalty_db, ground_penalty_db,
                                   interference_radius_m,
                                   interference_db_pre_lock,
                                   interference_db_post_lock)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RunConfig, scenario, world, uav_speed_mps,
                                   uav_altitude_m, rep, seed, sim_time_s, dt_s,
                                   carrier_hz, handover, detection, backhaul,
                                   mobility, radio)

json to_json(const RunConfig& cfg) {
  json j;
  nlohmann::to_json(j, cfg);
  return j;
}

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void check_enum(const std::string& path, const json& value) {
  if (ends_with(path, "all_gnb_backhaul") || ends_with(path, "backhaul.kind") ||
      ends_with(path, "].backhaul")) {
    const auto v = value.get<std::string>();
    if (v != "terrestrial" && v != "leo_satellite") {
      throw ConfigError(path + ": expected \"terrestrial\" or \"leo_satellite\"");
    }
  } else if (path == "scenario.id") {
    parse_scenario_id(value.get<std::string>());
  }
}

bool compatible(const json& schema, const json& value) {
  if (schema.is_number_float()) return value.is_number();
  if (schema.is_number_integer()) {
    return value.is_number_integer() || value.is_number_unsigned();
  }
  return schema.type() == value.type();
}

// Returns `overlay` with every array element completed from the schema's
// first element; throws on unknown keys or type mismatches.
json normalize(const json& schema, const json& overlay, const std::string& path) {
  if (schema.is_object()) {
    if (!overlay.is_object()) throw ConfigError(path + ": expected an object");
    json out = json::object();
    for (const auto& [key, value] : overlay.items()) {
      const std::string field = join(path, key);
      if (!schema.contains(key)) throw ConfigError(field + ": unknown key");
      out[key] = normalize(schema.at(key), value, field);
    }
    return out;
  }
  if (schema.is_array()) {
    if (!overlay.is_array()) throw ConfigError(path + ": expected an array");
    json out = json::array();
    for (std::size_t i = 0; i < overlay.size(); ++i) {
      const std::string field = path + "[" + std::to_string(i) + "]";
      json element = schema.at(0);
      element.merge_patch(normalize(schema.at(0), overlay[i], field));
      out.push_back(std::move(element));
    }
    return out;
  }
  if (!compatible(schema, overlay)) {
    throw ConfigError(path + ": expected " + std::string(schema.type_name()) +
                      ", got " + std::string(overlay.type_name()));
  }
  check_enum(path, overlay);
  return overlay;
}

const json& schema() {
  // Default config with non-empty arrays serves as the key/type schema.
  static const json s = [] {
    RunConfig cfg;
    cfg.scenario = scenario_spec(ScenarioId::Terrestrial);
    cfg.world = default_world();
    return to_json(cfg);
  }();
  return s;
}

}  // namespace

RunConfig apply_overlay(const RunConfig& base, const json& overlay) {
  json merged = to_json(base);
  const json patch = normalize(schema(), overlay, "");
  // merge_patch replaces arrays wholesale, which is the documented behavior.
  merged.merge_patch(patch);
  try {
    return merged.get<RunConfig>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("<root>: ") + e.what());
  }
}

RunConfig run_config_from_json(const json& j) {
  ScenarioSpec scenario = scenario_spec(ScenarioId::Terrestrial);
  if (j.contains("scenario") && j.at("scenario").contains("id")) {
    scenario = scenario_spec(
        parse_scenario_id(j.at("scenario").at("id").get<std::string>()));
  }
  RunConfig defaults;
  return make_run_config(scenario, defaults.uav_speed_mps,
                         defaults.uav_altitude_m, defaults.rep, j);
}

}  // namespace uavsim
