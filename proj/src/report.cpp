#include "uavsim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace uavsim {

std::string_view path_name(MitigationPath path) {
  switch (path) {
    case MitigationPath::Immediate: return "immediate";
    case MitigationPath::Remote: return "remote";
    case MitigationPath::Fallback: return "fallback";
  }
  return "unknown";
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

namespace {

std::string opt6(const std::optional<double>& v) { return v ? fixed6(*v) : ""; }

}  // namespace

void write_runs_csv(std::ostream& out, const std::vector<KpiRecord>& records) {
  out << kRunsCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.scenario << ',' << fixed6(r.uav_speed_mps) << ','
        << fixed6(r.uav_altitude_m) << ',' << r.rep << ',' << r.seed << ','
        << (r.detected ? 1 : 0) << ',' << opt6(r.t_detect_s) << ','
        << opt6(r.t_apply_s) << ',' << opt6(r.delay_s) << ','
        << (r.path ? path_name(*r.path) : "") << ',' << r.extra_handovers << ','
        << fixed6(r.patrol_ho_rate_per_min) << ','
        << fixed6(r.dwell_before_lock_s) << ',' << r.nfz_violation_steps << ','
        << r.uav_total_hos << ',' << r.patrol_total_hos << '\n';
  }
}

void write_heatmap_csv(std::ostream& out, const HeatmapTable& table) {
  out << "speed_mps\\altitude_m";
  for (double a : table.altitudes_m) out << ',' << fixed6(a);
  out << '\n';
  for (std::size_t s = 0; s < table.speeds_mps.size(); ++s) {
    out << fixed6(table.speeds_mps[s]);
    for (std::size_t a = 0; a < table.altitudes_m.size(); ++a) {
      out << ',' << opt6(table.at(s, a));
    }
    out << '\n';
  }
}

void write_cdf_csv(std::ostream& out, const CdfCurve& curve) {
  out << "x,F,band_lo,band_hi\n";
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    out << fixed6(curve.x[i]) << ',' << fixed6(curve.f[i]) << ','
        << (i < curve.band_lo.size() ? fixed6(curve.band_lo[i]) : "") << ','
        << (i < curve.band_hi.size() ? fixed6(curve.band_hi[i]) : "") << '\n';
  }
}

nlohmann::json record_to_json(const KpiRecord& r) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {
      {"scenario", r.scenario},
      {"speed_mps", r.uav_speed_mps},
      {"altitude_m", r.uav_altitude_m},
      {"rep", r.rep},
      {"seed", r.seed},
      {"detected", r.detected},
      {"t_detect_s", opt(r.t_detect_s)},
      {"t_apply_s", opt(r.t_apply_s)},
      {"delay_s", opt(r.delay_s)},
      {"path", r.path ? nlohmann::json(path_name(*r.path)) : nlohmann::json(nullptr)},
      {"extra_handovers", r.extra_handovers},
      {"patrol_ho_rate_per_min", r.patrol_ho_rate_per_min},
      {"dwell_before_lock_s", r.dwell_before_lock_s},
      {"nfz_violation_steps", r.nfz_violation_steps},
      {"uav_total_hos", r.uav_total_hos},
      {"patrol_total_hos", r.patrol_total_hos},
  };
}

void write_record_table(std::ostream& out, const KpiRecord& r) {
  auto row = [&](std::string_view key, const std::string& value) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-24s %s\n", std::string(key).c_str(),
                  value.c_str());
    out << buf;
  };
  auto opt = [](const std::optional<double>& v) {
    return v ? fixed6(*v) : std::string("-");
  };
  row("scenario", r.scenario);
  row("speed_mps", fixed6(r.uav_speed_mps));
  row("altitude_m", fixed6(r.uav_altitude_m));
  row("rep", std::to_string(r.rep));
  row("seed", std::to_string(r.seed));
  row("detected", r.detected ? "yes" : "no");
  row("t_detect_s", opt(r.t_detect_s));
  row("t_apply_s", opt(r.t_apply_s));
  row("delay_s", opt(r.delay_s));
  row("path", r.path ? std::string(path_name(*r.path)) : "-");
  row("extra_handovers", std::to_string(r.extra_handovers));
  row("patrol_ho_rate_per_min", fixed6(r.patrol_ho_rate_per_min));
  row("dwell_before_lock_s", fixed6(r.dwell_before_lock_s));
  row("nfz_violation_steps", std::to_string(r.nfz_violation_steps));
  row("uav_total_hos", std::to_string(r.uav_total_hos));
  row("patrol_total_hos", std::to_string(r.patrol_total_hos));
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw OutputError("cannot open " + file.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw OutputError("failed writing " + file.string());
}

nlohmann::json sweep_meta(const GridSpec& grid) {
  nlohmann::json scenarios = nlohmann::json::array();
  nlohmann::json configs = nlohmann::json::object();
  for (const auto& s : grid.scenarios) {
    scenarios.push_back(s.label);
    // Resolved config at the first grid point; other points differ only in
    // speed, altitude, rep and seed.
    configs[s.label] = to_json(make_run_config(
        s, grid.speeds_mps.front(), grid.altitudes_m.front(), 0, grid.overrides));
  }
  return {
      {"artifact_version", kArtifactVersion},
      {"prng", Rng::kAlgorithm},
      {"grid",
       {{"speeds_mps", grid.speeds_mps},
        {"altitudes_m", grid.altitudes_m},
        {"reps", grid.reps},
        {"scenarios", scenarios}}},
      {"overrides", grid.overrides},
      {"resolved_configs", configs},
      {"bootstrap", {{"resamples", 1000}, {"alpha", 0.05}, {"points", kBandPoints}}},
  };
}

void write_sweep_outputs(const std::filesystem::path& dir, const GridSpec& grid,
                         const std::vector<KpiRecord>& records) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw OutputError("cannot create output directory " + dir.string());
  }

  std::ostringstream runs;
  write_runs_csv(runs, records);
  write_text_file(dir / "runs.csv", runs.str());

  for (const auto& s : grid.scenarios) {
    for (Kpi kpi : kAllKpis) {
      const std::string stem = std::string(kpi_name(kpi)) + "_" + s.label;
      std::ostringstream heat;
      write_heatmap_csv(heat, aggregate_heatmap(records, kpi, s.label));
      write_text_file(dir / ("heatmap_" + stem + ".csv"), heat.str());

      std::ostringstream cdf;
      auto samples = kpi_samples(records, kpi, s.label);
      if (samples.empty()) {
        write_cdf_csv(cdf, CdfCurve{});
      } else {
        write_cdf_csv(cdf, bootstrap_band(std::move(samples)));
      }
      write_text_file(dir / ("cdf_" + stem + ".csv"), cdf.str());
    }
  }
  write_text_file(dir / "meta.json", sweep_meta(grid).dump(2) + "\n");
}

}  // namespace uavsim
