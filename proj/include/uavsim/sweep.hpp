#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uavsim/engine.hpp"
#include "uavsim/scenario.hpp"

namespace uavsim {

struct GridSpec {
  std::vector<double> speeds_mps{6, 9, 12, 15, 18};
  std::vector<double> altitudes_m{60, 90, 120, 150, 180};
  int reps = 20;
  std::vector<ScenarioSpec> scenarios;
  /// Partial RunConfig applied to every run (from --config).
  nlohmann::json overrides = nlohmann::json::object();
};

void validate(const GridSpec& grid);

/// Every RunConfig of the grid in canonical (scenario, speed, altitude, rep)
/// order; scenarios keep their order in `grid.scenarios`.
std::vector<RunConfig> expand_grid(const GridSpec& grid);

/// OpenMP map of simulate() over the grid. Each run writes its own slot, so
/// the result is in canonical order for any thread count.
std::vector<KpiRecord> run_grid(const GridSpec& grid, int parallelism);

/// Single-threaded reference for run_grid.
std::vector<KpiRecord> run_grid_serial(const GridSpec& grid);

std::vector<KpiRecord> run_configs(const std::vector<RunConfig>& configs,
                                   int parallelism);

enum class Kpi { Delay, ExtraHandovers, PatrolHoRate, Dwell, NfzSteps };

inline constexpr Kpi kAllKpis[] = {Kpi::Delay, Kpi::ExtraHandovers,
                                   Kpi::PatrolHoRate, Kpi::Dwell, Kpi::NfzSteps};

/// Column name of the KPI in runs.csv.
std::string_view kpi_name(Kpi kpi);

/// KPI value of a run, or nullopt when the run is excluded from that KPI's
/// statistics (undetected runs for delay, extra handovers and dwell).
std::optional<double> kpi_value(const KpiRecord& rec, Kpi kpi);

std::vector<double> kpi_samples(const std::vector<KpiRecord>& records, Kpi kpi,
                                std::string_view scenario);

struct HeatmapTable {
  std::vector<double> speeds_mps;
  std::vector<double> altitudes_m;
  /// Row-major [speed][altitude]; nullopt where no run contributes.
  std::vector<std::optional<double>> cells;

  std::optional<double> at(std::size_t speed_idx, std::size_t alt_idx) const {
    return cells[speed_idx * altitudes_m.size() + alt_idx];
  }
};

HeatmapTable aggregate_heatmap(const std::vector<KpiRecord>& records, Kpi kpi,
                               std::string_view scenario);

enum class SensitivityAxis { Hysteresis, HoThreshold, OutageRate };

struct SensitivitySpec {
  SensitivityAxis axis = SensitivityAxis::Hysteresis;
  std::vector<double> values;
};

std::string_view axis_name(SensitivityAxis axis);  // CLI spelling
SensitivityAxis parse_axis(std::string_view name);  // throws ConfigError
std::vector<double> default_axis_values(SensitivityAxis axis);

struct SensitivityResult {
  double value = 0.0;
  std::vector<KpiRecord> records;
};

/// Scenario label for one axis value, e.g. "leo+H=1".
std::string sensitivity_label(std::string_view base, SensitivityAxis axis,
                              double value);

/// Reruns `base` once per axis value with the value applied as an override.
/// Records carry the tagged label; seeds use the untagged scenario name, so
/// every axis value sees the same random streams.
std::vector<SensitivityResult> run_sensitivity(const SensitivitySpec& spec,
                                               const GridSpec& base,
                                               int parallelism);

}  // namespace uavsim
