#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uavsim/backhaul.hpp"
#include "uavsim/detection.hpp"
#include "uavsim/geometry.hpp"
#include "uavsim/handover.hpp"
#include "uavsim/mobility.hpp"
#include "uavsim/radio.hpp"

namespace uavsim {

/// Invalid configuration value. The message starts with the dotted field path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioId {
  Terrestrial,
  LeoOutage,
  LeoOutageFallback,
  StressNoFallback,
  StressFallback,
};

struct ScenarioSpec {
  ScenarioId id = ScenarioId::Terrestrial;
  /// Name written to result rows. Equals the catalogue name except for
  /// sensitivity sweeps, which append the axis value ("leo+H=1").
  std::string label;
  Backhaul all_gnb_backhaul = Backhaul::Terrestrial;
  double outage_rate_hz = 0.0;
  double outage_duration_s = 5.0;
  bool fallback_enabled = false;
  double fallback_deadline_s = 2.0;

  bool operator==(const ScenarioSpec&) const = default;
};

/// Catalogue name used on the command line and in seed derivation.
std::string_view scenario_name(ScenarioId id);
ScenarioId parse_scenario_id(std::string_view name);  // throws ConfigError

ScenarioSpec scenario_spec(ScenarioId id);
const std::vector<ScenarioSpec>& scenario_catalogue();

struct RunConfig {
  ScenarioSpec scenario;
  WorldGeometry world;
  double uav_speed_mps = 12.0;
  double uav_altitude_m = 120.0;
  int rep = 0;
  std::uint64_t seed = 0;
  double sim_time_s = 200.0;
  double dt_s = 0.5;
  double carrier_hz = 3.5e9;
  HandoverConfig handover;
  DetectionConfig detection;
  BackhaulConfig backhaul;
  MobilityConfig mobility;
  RadioConfig radio;

  int steps() const;
  bool operator==(const RunConfig&) const = default;
};

/// FNV-1a 64 of "<scenario_id>|<speed>|<altitude>|<rep>".
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t derive_seed(std::string_view scenario_id, double speed_mps,
                          double altitude_m, int rep);

/// Shortest decimal rendering; integral values print without a fraction.
std::string format_number(double v);

/// Table defaults for `scenario`, then `overrides` (a partial RunConfig in
/// JSON form), then the seed. An explicit "seed" key in `overrides` is kept
/// as given.
RunConfig make_run_config(const ScenarioSpec& scenario, double speed_mps,
                          double altitude_m, int rep,
                          const nlohmann::json& overrides = nlohmann::json::object());

/// Throws ConfigError naming the first violated field.
void validate(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);

/// Strict overlay: unknown keys and type mismatches are ConfigErrors.
/// Arrays (world.nfzs, world.gnbs) replace the base array; each element may
/// be partial and is completed from a default element.
RunConfig apply_overlay(const RunConfig& base, const nlohmann::json& overlay);

/// Parses a complete or partial RunConfig document onto the table defaults.
RunConfig run_config_from_json(const nlohmann::json& j);

}  // namespace uavsim
