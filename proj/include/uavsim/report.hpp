#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uavsim/engine.hpp"
#include "uavsim/stats.hpp"
#include "uavsim/sweep.hpp"

namespace uavsim {

inline constexpr const char* kArtifactVersion = "0.1.0";

inline constexpr const char* kRunsCsvHeader =
    "scenario,speed_mps,altitude_m,rep,seed,detected,t_detect_s,t_apply_s,"
    "delay_s,path,extra_handovers,patrol_ho_rate_per_min,dwell_before_lock_s,"
    "nfz_violation_steps,uav_total_hos,patrol_total_hos";

std::string_view path_name(MitigationPath path);

/// Fixed six-decimal rendering used by every CSV file.
std::string fixed6(double v);

void write_runs_csv(std::ostream& out, const std::vector<KpiRecord>& records);
void write_heatmap_csv(std::ostream& out, const HeatmapTable& table);
void write_cdf_csv(std::ostream& out, const CdfCurve& curve);

nlohmann::json record_to_json(const KpiRecord& rec);

/// Human-readable two-column table of one record.
void write_record_table(std::ostream& out, const KpiRecord& rec);

/// Thrown when an output file cannot be created or written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes runs.csv, heatmap_<kpi>_<scenario>.csv, cdf_<kpi>_<scenario>.csv
/// and meta.json under `dir`.
void write_sweep_outputs(const std::filesystem::path& dir, const GridSpec& grid,
                         const std::vector<KpiRecord>& records);

void write_text_file(const std::filesystem::path& file, const std::string& text);

nlohmann::json sweep_meta(const GridSpec& grid);

}  // namespace uavsim
