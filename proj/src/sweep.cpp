#include "uavsim/sweep.hpp"

#include <algorithm>

#include <omp.h>

#include "uavsim/stats.hpp"

namespace uavsim {

void validate(const GridSpec& grid) {
  if (grid.speeds_mps.empty()) throw ConfigError("grid.speeds_mps: must be nonempty");
  if (grid.altitudes_m.empty()) throw ConfigError("grid.altitudes_m: must be nonempty");
  if (grid.reps < 1) throw ConfigError("grid.reps: must be >= 1");
  if (grid.scenarios.empty()) throw ConfigError("grid.scenarios: must be nonempty");
}

std::vector<RunConfig> expand_grid(const GridSpec& grid) {
  validate(grid);
  std::vector<RunConfig> configs;
  configs.reserve(grid.scenarios.size() * grid.speeds_mps.size() *
                  grid.altitudes_m.size() * static_cast<std::size_t>(grid.reps));
  for (const auto& scenario : grid.scenarios) {
    for (double speed : grid.speeds_mps) {
      for (double alt : grid.altitudes_m) {
        for (int rep = 0; rep < grid.reps; ++rep) {
          configs.push_back(
              make_run_config(scenario, speed, alt, rep, grid.overrides));
        }
      }
    }
  }
  return configs;
}

std::vector<KpiRecord> run_configs(const std::vector<RunConfig>& configs,
                                   int parallelism) {
  std::vector<KpiRecord> records(configs.size());
  const long n = static_cast<long>(configs.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(std::max(parallelism, 1))
  for (long i = 0; i < n; ++i) {
    records[static_cast<std::size_t>(i)] =
        simulate(configs[static_cast<std::size_t>(i)]);
  }
  return records;
}

std::vector<KpiRecord> run_grid(const GridSpec& grid, int parallelism) {
  return run_configs(expand_grid(grid), parallelism);
}

std::vector<KpiRecord> run_grid_serial(const GridSpec& grid) {
  std::vector<KpiRecord> records;
  for (const auto& cfg : expand_grid(grid)) records.push_back(simulate(cfg));
  return records;
}

std::string_view kpi_name(Kpi kpi) {
  switch (kpi) {
    case Kpi::Delay: return "delay_s";
    case Kpi::ExtraHandovers: return "extra_handovers";
    case Kpi::PatrolHoRate: return "patrol_ho_rate_per_min";
    case Kpi::Dwell: return "dwell_before_lock_s";
    case Kpi::NfzSteps: return "nfz_violation_steps";
  }
  return "unknown";
}

std::optional<double> kpi_value(const KpiRecord& rec, Kpi kpi) {
  switch (kpi) {
    case Kpi::Delay: return rec.delay_s;
    case Kpi::ExtraHandovers:
      if (!rec.detected) return std::nullopt;
      return rec.extra_handovers;
    case Kpi::Dwell:
      if (!rec.detected) return std::nullopt;
      return rec.dwell_before_lock_s;
    case Kpi::PatrolHoRate: return rec.patrol_ho_rate_per_min;
    case Kpi::NfzSteps: return rec.nfz_violation_steps;
  }
  return std::nullopt;
}

std::vector<double> kpi_samples(const std::vector<KpiRecord>& records, Kpi kpi,
                                std::string_view scenario) {
  std::vector<double> out;
  for (const auto& r : records) {
    if (r.scenario != scenario) continue;
    if (auto v = kpi_value(r, kpi)) out.push_back(*v);
  }
  return out;
}

HeatmapTable aggregate_heatmap(const std::vector<KpiRecord>& records, Kpi kpi,
                               std::string_view scenario) {
  HeatmapTable table;
  for (const auto& r : records) {
    if (r.scenario != scenario) continue;
    table.speeds_mps.push_back(r.uav_speed_mps);
    table.altitudes_m.push_back(r.uav_altitude_m);
  }
  for (auto* axis : {&table.speeds_mps, &table.altitudes_m}) {
    std::sort(axis->begin(), axis->end());
    axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
  }

  const std::size_t n_alt = table.altitudes_m.size();
  std::vector<std::vector<double>> buckets(table.speeds_mps.size() * n_alt);
  for (const auto& r : records) {
    if (r.scenario != scenario) continue;
    const auto v = kpi_value(r, kpi);
    if (!v) continue;
    const auto si = static_cast<std::size_t>(
        std::lower_bound(table.speeds_mps.begin(), table.speeds_mps.end(),
                         r.uav_speed_mps) - table.speeds_mps.begin());
    const auto ai = static_cast<std::size_t>(
        std::lower_bound(table.altitudes_m.begin(), table.altitudes_m.end(),
                         r.uav_altitude_m) - table.altitudes_m.begin());
    buckets[si * n_alt + ai].push_back(*v);
  }
  table.cells.reserve(buckets.size());
  for (auto& b : buckets) table.cells.push_back(median(std::move(b)));
  return table;
}

std::string_view axis_name(SensitivityAxis axis) {
  switch (axis) {
    case SensitivityAxis::Hysteresis: return "hysteresis";
    case SensitivityAxis::HoThreshold: return "ho-threshold";
    case SensitivityAxis::OutageRate: return "outage-rate";
  }
  return "unknown";
}

SensitivityAxis parse_axis(std::string_view name) {
  for (auto a : {SensitivityAxis::Hysteresis, SensitivityAxis::HoThreshold,
                 SensitivityAxis::OutageRate}) {
    if (axis_name(a) == name) return a;
  }
  throw ConfigError("axis: unknown sensitivity axis '" + std::string(name) + "'");
}

std::vector<double> default_axis_values(SensitivityAxis axis) {
  switch (axis) {
    case SensitivityAxis::Hysteresis: return {1, 2, 3, 4, 6};
    case SensitivityAxis::HoThreshold: return {2, 3, 4};
    case SensitivityAxis::OutageRate: return {0.01, 0.02, 0.05};
  }
  return {};
}

namespace {

std::string_view axis_tag(SensitivityAxis axis) {
  switch (axis) {
    case SensitivityAxis::Hysteresis: return "H";
    case SensitivityAxis::HoThreshold: return "ho";
    case SensitivityAxis::OutageRate: return "lambda";
  }
  return "?";
}

nlohmann::json axis_override(SensitivityAxis axis, double value) {
  switch (axis) {
    case SensitivityAxis::Hysteresis:
      return {{"handover", {{"hysteresis_db", value}}}};
    case SensitivityAxis::HoThreshold: {
      const auto count = static_cast<int>(value);
      if (count != value) {
        throw ConfigError("detection.ho_count_threshold: must be an integer");
      }
      return {{"detection", {{"ho_count_threshold", count}}}};
    }
    case SensitivityAxis::OutageRate:
      return {{"backhaul", {{"outage_rate_hz", value}}}};
  }
  return nlohmann::json::object();
}

}  // namespace

std::string sensitivity_label(std::string_view base, SensitivityAxis axis,
                              double value) {
  return std::string(base) + "+" + std::string(axis_tag(axis)) + "=" +
         format_number(value);
}

std::vector<SensitivityResult> run_sensitivity(const SensitivitySpec& spec,
                                               const GridSpec& base,
                                               int parallelism) {
  if (spec.values.empty()) throw ConfigError("values: must be nonempty");
  std::vector<SensitivityResult> results;
  for (double value : spec.values) {
    GridSpec grid = base;
    grid.overrides.merge_patch(axis_override(spec.axis, value));
    for (auto& s : grid.scenarios) {
      s.label = sensitivity_label(s.label, spec.axis, value);
    }
    results.push_back({value, run_grid(grid, parallelism)});
  }
  return results;
}

}  // namespace uavsim
