#include "uavsim/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "uavsim/check.hpp"
#include "uavsim/engine.hpp"
#include "uavsim/report.hpp"
#include "uavsim/stats.hpp"
#include "uavsim/sweep.hpp"

namespace uavsim {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_config(const std::string& file) {
  if (file.empty()) return json::object();
  std::ifstream in(file);
  if (!in) throw OutputError("--config: cannot read " + file);
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw UsageError("--config: top level must be an object");
    return j;
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
}

std::vector<ScenarioSpec> parse_scenarios(const std::vector<std::string>& names) {
  std::vector<ScenarioSpec> out;
  for (const auto& n : names) {
    if (n.empty()) continue;
    try {
      out.push_back(scenario_spec(parse_scenario_id(n)));
    } catch (const ConfigError&) {
      throw UsageError("--scenarios: unknown scenario '" + n + "'");
    }
  }
  if (out.empty()) throw UsageError("--scenarios: at least one scenario is required");
  return out;
}

struct GridFlags {
  std::vector<std::string> scenarios;
  std::string out_dir;
  int jobs = 1;
  std::string config;
  std::vector<double> speeds;
  std::vector<double> altitudes;
  int reps = 20;
};

void add_grid_flags(CLI::App* cmd, GridFlags& f) {
  cmd->add_option("--out-dir", f.out_dir, "Output directory")->required();
  cmd->add_option("--jobs", f.jobs, "Parallel runs")->check(CLI::PositiveNumber);
  cmd->add_option("--config", f.config, "JSON RunConfig overlay");
  cmd->add_option("--speeds", f.speeds, "UAV speeds, m/s")->delimiter(',');
  cmd->add_option("--altitudes", f.altitudes, "UAV altitudes, m")->delimiter(',');
  cmd->add_option("--reps", f.reps, "Monte Carlo repetitions per grid point")
      ->check(CLI::PositiveNumber);
}

GridSpec make_grid(const GridFlags& f) {
  GridSpec grid;
  grid.scenarios = parse_scenarios(f.scenarios);
  if (!f.speeds.empty()) grid.speeds_mps = f.speeds;
  if (!f.altitudes.empty()) grid.altitudes_m = f.altitudes;
  grid.reps = f.reps;
  grid.overrides = load_config(f.config);
  return grid;
}

std::string median_text(std::vector<double> v) {
  const auto m = median(std::move(v));
  return m ? fixed6(*m) : "n/a";
}

int cmd_run(const std::string& scenario, const std::optional<double>& speed,
            const std::optional<double>& alt, const std::optional<int>& rep,
            const std::string& config, bool as_json, std::ostream& out) {
  ScenarioSpec spec;
  try {
    spec = scenario_spec(parse_scenario_id(scenario));
  } catch (const ConfigError&) {
    throw UsageError("--scenario: unknown scenario '" + scenario + "'");
  }
  json overlay = load_config(config);
  if (speed) overlay["uav_speed_mps"] = *speed;
  if (alt) overlay["uav_altitude_m"] = *alt;
  if (rep) overlay["rep"] = *rep;

  const RunConfig defaults;
  const auto cfg = make_run_config(spec, defaults.uav_speed_mps,
                                   defaults.uav_altitude_m, defaults.rep, overlay);
  const auto rec = simulate(cfg);
  if (as_json) {
    out << record_to_json(rec).dump() << '\n';
  } else {
    write_record_table(out, rec);
  }
  return kExitOk;
}

int cmd_sweep(const GridFlags& flags, std::ostream& out) {
  const GridSpec grid = make_grid(flags);
  const auto records = run_grid(grid, flags.jobs);
  write_sweep_outputs(flags.out_dir, grid, records);
  for (const auto& s : grid.scenarios) {
    const auto delays = kpi_samples(records, Kpi::Delay, s.label);
    std::size_t runs = 0;
    for (const auto& r : records) runs += r.scenario == s.label;
    out << s.label << ": runs=" << runs << " detected=" << delays.size()
        << " median_delay_s=" << median_text(delays) << '\n';
  }
  return kExitOk;
}

int cmd_sensitivity(const std::string& axis_text, std::vector<double> values,
                    const GridFlags& flags, std::ostream& out) {
  SensitivityAxis axis;
  try {
    axis = parse_axis(axis_text);
  } catch (const ConfigError&) {
    throw UsageError("--axis: unknown axis '" + axis_text +
                     "' (expected hysteresis, ho-threshold or outage-rate)");
  }
  if (values.empty()) values = default_axis_values(axis);
  const GridSpec grid = make_grid(flags);
  const auto results = run_sensitivity({axis, values}, grid, flags.jobs);

  std::error_code ec;
  fs::create_directories(flags.out_dir, ec);
  if (ec || !fs::is_directory(flags.out_dir)) {
    throw OutputError("cannot create output directory " + flags.out_dir);
  }

  std::ostringstream summary;
  summary << "axis,value,scenario,runs,detected,median_t_detect_s,"
             "median_delay_s,max_delay_s,median_extra_handovers,"
             "median_patrol_ho_rate_per_min\n";
  for (const auto& res : results) {
    std::ostringstream runs;
    write_runs_csv(runs, res.records);
    write_text_file(fs::path(flags.out_dir) / ("runs_" + std::string(axis_name(axis)) +
                                               "_" + format_number(res.value) + ".csv"),
                    runs.str());
    for (const auto& s : grid.scenarios) {
      const std::string label = sensitivity_label(s.label, axis, res.value);
      std::vector<double> t_detect;
      std::size_t n = 0;
      for (const auto& r : res.records) {
        if (r.scenario != label) continue;
        ++n;
        if (r.t_detect_s) t_detect.push_back(*r.t_detect_s);
      }
      const auto delays = kpi_samples(res.records, Kpi::Delay, label);
      const auto max_delay =
          delays.empty() ? std::string("")
                         : fixed6(*std::max_element(delays.begin(), delays.end()));
      auto med = [](std::vector<double> v) {
        const auto m = median(std::move(v));
        return m ? fixed6(*m) : std::string("");
      };
      summary << axis_name(axis) << ',' << format_number(res.value) << ',' << label
              << ',' << n << ',' << t_detect.size() << ',' << med(t_detect) << ','
              << med(delays) << ',' << max_delay << ','
              << med(kpi_samples(res.records, Kpi::ExtraHandovers, label)) << ','
              << med(kpi_samples(res.records, Kpi::PatrolHoRate, label)) << '\n';
      out << label << ": runs=" << n << " detected=" << t_detect.size()
          << " median_t_detect_s=" << median_text(t_detect)
          << " median_delay_s=" << median_text(delays) << '\n';
    }
  }
  write_text_file(fs::path(flags.out_dir) / "summary.csv", summary.str());

  json meta = sweep_meta(grid);
  meta["sensitivity"] = {{"axis", axis_name(axis)}, {"values", values}};
  write_text_file(fs::path(flags.out_dir) / "meta.json", meta.dump(2) + "\n");
  return kExitOk;
}

int cmd_check(const std::string& fault, std::ostream& out) {
  InjectedFault f = InjectedFault::None;
  if (fault == "fallback") {
    f = InjectedFault::FallbackIgnored;
  } else if (fault != "none") {
    throw UsageError("--inject-fault: expected none or fallback");
  }
  const auto results = run_checks(out, f);
  for (const auto& r : results) {
    if (!r.passed) {
      out << "check failed: " << r.name << '\n';
      return kExitCheckFailed;
    }
  }
  out << "all checks passed\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"UAV intrusion detect-to-mitigate simulator", "uavsim"};
  app.require_subcommand(1);

  std::string scenario;
  std::optional<double> speed;
  std::optional<double> alt;
  std::optional<int> rep;
  std::string run_config;
  bool as_json = false;
  auto* run = app.add_subcommand("run", "Simulate one run and print its KPIs");
  run->add_option("--scenario", scenario, "Scenario name")->required();
  run->add_option("--speed", speed, "UAV speed, m/s");
  run->add_option("--alt", alt, "UAV altitude, m");
  run->add_option("--rep", rep, "Repetition index");
  run->add_option("--config", run_config, "JSON RunConfig overlay");
  run->add_flag("--json", as_json, "Print one JSON object");

  GridFlags sweep_flags;
  sweep_flags.scenarios = {"terrestrial", "leo", "leo-fallback"};
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over the grid");
  sweep->add_option("--scenarios", sweep_flags.scenarios, "Comma-separated scenarios")
      ->delimiter(',');
  add_grid_flags(sweep, sweep_flags);

  GridFlags sens_flags;
  sens_flags.scenarios = {"leo-fallback"};
  std::string axis;
  std::vector<double> values;
  auto* sens = app.add_subcommand("sensitivity", "Sweep one parameter axis");
  sens->add_option("--axis", axis, "hysteresis | ho-threshold | outage-rate")
      ->required();
  sens->add_option("--values", values, "Comma-separated axis values")->delimiter(',');
  sens->add_option("--scenarios", sens_flags.scenarios, "Comma-separated scenarios")
      ->delimiter(',');
  add_grid_flags(sens, sens_flags);

  std::string fault = "none";
  auto* check = app.add_subcommand("check", "Run the fast invariant suite");
  check->add_option("--inject-fault", fault, "Fault injection (none | fallback)");

  std::vector<std::string> argv_store{"uavsim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(scenario, speed, alt, rep, run_config, as_json, out);
    if (*sweep) return cmd_sweep(sweep_flags, out);
    if (*sens) return cmd_sensitivity(axis, values, sens_flags, out);
    if (*check) return cmd_check(fault, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: config " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace uavsim
