#include "uavsim/check.hpp"

#include <cstdio>

#include "uavsim/backhaul.hpp"
#include "uavsim/engine.hpp"
#include "uavsim/reference.hpp"
#include "uavsim/sweep.hpp"

namespace uavsim {

namespace {

CheckResult a3_oracle() {
  const HandoverConfig cfg;
  Rng rng(derive_seed("check-a3", 0, 0, 0));
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const auto trace = reference::random_trace(rng, 400, 3);
    auto state = init_serving(trace.front());
    for (std::size_t k = 0; k < trace.size(); ++k) {
      step_a3(state, trace[k], static_cast<double>(k) * 0.5, 0.5, cfg);
    }
    if (state.ho_log != reference::a3_handovers(trace, 0.5, cfg)) ++mismatches;
  }
  return {"a3-oracle", mismatches == 0,
          std::to_string(mismatches) + " mismatches over 100 traces"};
}

CheckResult detector_oracle() {
  int mismatches = 0;
  const auto spec = scenario_spec(ScenarioId::LeoOutage);
  for (int rep = 0; rep < 20; ++rep) {
    const double speed = 6.0 + 3.0 * (rep % 5);
    const double alt = 60.0 + 30.0 * (rep / 4 % 5);
    const auto cfg = make_run_config(spec, speed, alt, rep);
    RunTrace trace;
    const auto rec = simulate_traced(cfg, trace);
    const auto ref = reference::detection_time(trace.uav_samples, trace.uav_serving,
                                               trace.uav_hos, cfg.dt_s, cfg.detection);
    if (ref != rec.t_detect_s) ++mismatches;
  }
  return {"detector-oracle", mismatches == 0,
          std::to_string(mismatches) + " mismatches over 20 runs"};
}

CheckResult poisson_rate() {
  double total = 0.0;
  for (int s = 0; s < 1000; ++s) {
    Rng rng(derive_seed("check-poisson", 0, 0, s));
    total += static_cast<double>(gen_outage_arrivals(rng, 0.02, 200.0).size());
  }
  const double mean = total / 1000.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "mean arrivals %.3f (expected 4.0 +/- 0.2)", mean);
  return {"poisson-rate", mean >= 3.8 && mean <= 4.2, buf};
}

CheckResult fallback_cap(InjectedFault fault) {
  GridSpec grid;
  grid.scenarios = {scenario_spec(ScenarioId::StressFallback)};
  grid.reps = 8;
  const double deadline = grid.scenarios.front().fallback_deadline_s;
  if (fault == InjectedFault::FallbackIgnored) {
    grid.overrides = {{"backhaul", {{"fallback_enabled", false}}}};
  }
  const auto records = run_grid(grid, 1);
  int violations = 0;
  double worst = 0.0;
  for (const auto& r : records) {
    if (!r.delay_s) continue;
    worst = std::max(worst, *r.delay_s);
    if (*r.delay_s > deadline) ++violations;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d of %zu stress runs over %.1f s (max %.3f s)",
                violations, records.size(), deadline, worst);
  return {"fallback-cap", violations == 0, buf};
}

}  // namespace

std::vector<CheckResult> run_checks(std::ostream& out, InjectedFault fault) {
  std::vector<CheckResult> results;
  results.push_back(a3_oracle());
  results.push_back(detector_oracle());
  results.push_back(poisson_rate());
  results.push_back(fallback_cap(fault));
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
  }
  return results;
}

}  // namespace uavsim
