// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uavsim/backhaul.hpp"
#include "uavsim/cli.hpp"
#include "uavsim/engine.hpp"
#include "uavsim/reference.hpp"
#include "uavsim/report.hpp"
#include "uavsim/stats.hpp"
#include "uavsim/sweep.hpp"

using namespace uavsim;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GridSpec default_grid(ScenarioId id) {
  GridSpec g;
  g.scenarios = {scenario_spec(id)};
  return g;
}

std::vector<const KpiRecord*> detected(const std::vector<KpiRecord>& rs) {
  std::vector<const KpiRecord*> out;
  for (const auto& r : rs) {
    if (r.detected) out.push_back(&r);
  }
  return out;
}

// Event-driven estimate of P(delay > tau) without fallback: a long Poisson
// outage process, commands issued at uniform instants, delay read off the
// merged outage that swallows the nominal arrival. Shares no code with the
// simulator's backhaul module.
double event_driven_tail(double rate, double dur, double tau, double latency) {
  std::mt19937_64 gen(12345);
  std::exponential_distribution<double> gap(rate);
  const double horizon = 2.0e6;
  std::vector<std::pair<double, double>> merged;
  for (double t = gap(gen); t < horizon; t += gap(gen)) {
    if (!merged.empty() && t < merged.back().second) {
      merged.back().second = t + dur;
    } else {
      merged.emplace_back(t, t + dur);
    }
  }
  std::uniform_real_distribution<double> when(1000.0, horizon - 1000.0);
  const int n = 400000;
  int late = 0;
  for (int i = 0; i < n; ++i) {
    const double issue = when(gen);
    const double arrive = issue + latency;
    auto it = std::upper_bound(merged.begin(), merged.end(), arrive,
                               [](double v, const auto& iv) { return v < iv.second; });
    double apply = arrive;
    if (it != merged.end() && it->first < arrive) apply = it->second;
    if (apply - issue > tau) ++late;
  }
  return static_cast<double>(late) / n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const auto t_all = std::chrono::steady_clock::now();

  // ---- 1. fallback hard cap ------------------------------------------------
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rs = run_grid(default_grid(ScenarioId::StressFallback), 8);
    const double secs = seconds_since(t0);
    const auto det = detected(rs);
    double worst = 0;
    bool ok = rs.size() == 500 && !det.empty();
    for (const auto* r : det) {
      worst = std::max(worst, *r->delay_s);
      ok = ok && *r->delay_s <= 2.0;
    }
    ok = ok && secs < 30.0;
    report(1, "fallback-cap", ok,
           fmt("%.0f runs, %.0f detected, max delay %.6f s (cap 2.0), %.2f s wall",
               static_cast<double>(rs.size()), static_cast<double>(det.size()), worst, secs));
  }

  // ---- 2. stress exposure without fallback ---------------------------------
  {
    const double lambda = 0.05, dur = 10.0, tau = 2.0;
    const double analytic = (1.0 - std::exp(-lambda * dur)) * 0.8;
    const double event = event_driven_tail(lambda, dur, tau, 0.030);
    const bool oracle_ok = std::abs(event - analytic) <= 0.05;

    const auto rs = run_grid(default_grid(ScenarioId::StressNoFallback), 8);
    const auto det = detected(rs);
    int late = 0;
    double worst = 0;
    for (const auto* r : det) {
      late += *r->delay_s > tau;
      worst = std::max(worst, *r->delay_s);
    }
    const double frac = det.empty() ? 0.0 : static_cast<double>(late) / det.size();
    const bool ok = oracle_ok && std::abs(frac - 0.31) <= 0.10 && worst > 5.0;
    report(2, "stress-exposure", ok,
           fmt("P(delay>2s) = %.3f (target 0.31+-0.10), max delay %.2f s (>5); "
               "oracle analytic %.3f vs event-driven %.3f",
               frac, worst, analytic, event));
  }

  // shared default grids for the remaining statistical criteria
  GridSpec all;
  all.scenarios = scenario_catalogue();
  const auto records = run_grid(all, 8);
  auto of = [&](const char* label) {
    std::vector<KpiRecord> out;
    for (const auto& r : records) {
      if (r.scenario == label) out.push_back(r);
    }
    return out;
  };

  // ---- 3. terrestrial immediacy --------------------------------------------
  {
    const auto rs = of("terrestrial");
    const auto det = detected(rs);
    int bad = 0;
    for (const auto* r : det) {
      bad += !(*r->delay_s == 0.0 && *r->path == MitigationPath::Immediate);
    }
    report(3, "terrestrial-immediate", !det.empty() && bad == 0,
           fmt("%.0f detected runs, %.0f with nonzero delay or non-immediate path",
               static_cast<double>(det.size()), static_cast<double>(bad)));
  }

  // ---- 4. extra handovers negligible ---------------------------------------
  {
    int n = 0, zero = 0;
    double worst_cell = 0;
    int absent_cells = 0;
    for (const char* label : {"leo", "leo-fallback"}) {
      const auto rs = of(label);
      for (const auto* r : detected(rs)) {
        ++n;
        zero += r->extra_handovers == 0;
      }
      const auto t = aggregate_heatmap(rs, Kpi::ExtraHandovers, label);
      for (const auto& c : t.cells) {
        if (c) {
          worst_cell = std::max(worst_cell, *c);
        } else {
          ++absent_cells;
        }
      }
    }
    const double frac = n ? static_cast<double>(zero) / n : 0.0;
    report(4, "extra-handovers", n > 0 && frac >= 0.90 && worst_cell == 0.0,
           fmt("%.1f%% of %.0f detected runs with zero extra HOs (>=90%%), max cell median "
               "%.1f, %.0f empty cells",
               100 * frac, n, worst_cell, absent_cells));
  }

  // ---- 5. patrol collateral -------------------------------------------------
  {
    const auto a = kpi_samples(records, Kpi::PatrolHoRate, "terrestrial");
    const auto b = kpi_samples(records, Kpi::PatrolHoRate, "leo-fallback");
    const double d = ks_distance(a, b);
    report(5, "patrol-collateral", a.size() == 500 && b.size() == 500 && d <= 0.15,
           fmt("KS distance %.4f over %.0f vs %.0f runs (<=0.15)", d,
               static_cast<double>(a.size()), static_cast<double>(b.size())));
  }

  // ---- 6. determinism -------------------------------------------------------
  {
    std::mt19937 pick(20240611);
    const auto configs = expand_grid(all);
    int mismatches = 0;
    for (int i = 0; i < 20; ++i) {
      const auto k = std::uniform_int_distribution<std::size_t>(0, configs.size() - 1)(pick);
      const auto a = simulate(configs[k]);
      const auto b = simulate(configs[k]);
      std::ostringstream ca, cb;
      write_runs_csv(ca, {a});
      write_runs_csv(cb, {records[k]});
      const bool same = a == b && a == records[k] && ca.str() == cb.str() &&
                        record_to_json(a).dump() == record_to_json(b).dump();
      mismatches += !same;
    }

    const auto base = fs::temp_directory_path() / "uavsim_acceptance";
    fs::remove_all(base);
    std::ostringstream sink;
    int rc1 = run_cli({"sweep", "--jobs", "1", "--out-dir", (base / "j1").string()}, sink, std::cerr);
    int rc8 = run_cli({"sweep", "--jobs", "8", "--out-dir", (base / "j8").string()}, sink, std::cerr);
    const auto csv1 = slurp(base / "j1" / "runs.csv");
    const auto csv8 = slurp(base / "j8" / "runs.csv");
    const auto rows = std::count(csv1.begin(), csv1.end(), '\n') - 1;
    const bool csv_ok = rc1 == 0 && rc8 == 0 && !csv1.empty() && csv1 == csv8 && rows == 1500;
    fs::remove_all(base);
    report(6, "determinism", mismatches == 0 && csv_ok,
           fmt("%.0f/20 rerun records differ; runs.csv --jobs 1 vs --jobs 8 ", mismatches) +
               (csv1 == csv8 && !csv1.empty() ? "identical" : "DIFFERENT") +
               fmt(" (%.0f data rows)", static_cast<double>(rows)));
  }

  // ---- 7. Poisson calibration -----------------------------------------------
  {
    long total = 0;
    for (int s = 0; s < 1000; ++s) {
      Rng rng(derive_seed("poisson", 0.02, 200, s));
      total += static_cast<long>(gen_outage_arrivals(rng, 0.02, 200).size());
    }
    const double mean = total / 1000.0;
    report(7, "poisson-rate", mean >= 3.8 && mean <= 4.2,
           fmt("mean arrivals %.3f over 1000 seeds (lambda*T = 4, window [3.8, 4.2])", mean));
  }

  // ---- 8. oracle equivalences -----------------------------------------------
  {
    Rng rng(derive_seed("a3-oracle", 0, 0, 0));
    const HandoverConfig ho;
    int a3_bad = 0, a3_events = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto trace = reference::random_trace(rng, 400, 3);
      HandoverState st = init_serving(trace.front());
      std::vector<HoEvent> fast;
      for (std::size_t k = 0; k < trace.size(); ++k) {
        if (auto ev = step_a3(st, trace[k], static_cast<double>(k) * 0.5, 0.5, ho)) {
          fast.push_back(*ev);
        }
      }
      a3_bad += fast != reference::a3_handovers(trace, 0.5, ho);
      a3_events += static_cast<int>(fast.size());
    }

    int det_bad = 0, fired = 0;
    std::mt19937 pick(77);
    const auto configs = expand_grid(all);
    for (int i = 0; i < 100; ++i) {
      const auto& cfg =
          configs[std::uniform_int_distribution<std::size_t>(0, configs.size() - 1)(pick)];
      RunTrace tr;
      const auto rec = simulate_traced(cfg, tr);
      const auto ref = reference::detection_time(tr.uav_samples, tr.uav_serving, tr.uav_hos,
                                                 cfg.dt_s, cfg.detection);
      det_bad += ref != rec.t_detect_s;
      fired += rec.detected;
    }
    report(8, "oracle-equivalence", a3_bad == 0 && det_bad == 0,
           fmt("A3 %.0f/1000 traces mismatch (%.0f HOs); detector %.0f/100 runs mismatch "
               "(%.0f fired)",
               a3_bad, a3_events, det_bad, fired));
  }

  // ---- 9. detection viability -----------------------------------------------
  {
    std::map<std::string, std::pair<int, int>> cells;  // key -> (detected, runs)
    for (const auto& r : records) {
      auto& c = cells[r.scenario + "|" + format_number(r.uav_speed_mps) + "|" +
                      format_number(r.uav_altitude_m)];
      c.first += r.detected;
      ++c.second;
    }
    double worst = 1.0;
    std::string worst_key;
    int detected_total = 0;
    for (const auto& [key, c] : cells) {
      detected_total += c.first;
      const double f = static_cast<double>(c.first) / c.second;
      if (f < worst) {
        worst = f;
        worst_key = key;
      }
    }
    report(9, "detection-viability", cells.size() == 125 && worst >= 0.80,
           fmt("%.0f cells, overall %.1f%%, worst cell %.0f%% (>=80%%)",
               static_cast<double>(cells.size()),
               100.0 * detected_total / static_cast<double>(records.size()), 100 * worst) +
               " at " + worst_key);
  }

  std::printf("acceptance: %d failure(s), %.1f s\n", failures, seconds_since(t_all));
  return failures == 0 ? 0 : 1;
}
