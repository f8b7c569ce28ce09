#include "uavsim/engine.hpp"

#include <algorithm>

#include "uavsim/detection.hpp"
#include "uavsim/mobility.hpp"
#include "uavsim/rng.hpp"

namespace uavsim {

namespace {

bool any_leo(const WorldGeometry& world) {
  return std::any_of(world.gnbs.begin(), world.gnbs.end(), [](const GnbSite& g) {
    return g.backhaul == Backhaul::LeoSatellite;
  });
}

KpiRecord run(const RunConfig& cfg, RunTrace* trace) {
  Rng rng(cfg.seed);
  const auto& world = cfg.world;
  const int steps = cfg.steps();
  const double dt = cfg.dt_s;

  // The outage schedule is drawn before any per-step draw.
  OutageSchedule outages;
  if (any_leo(world)) {
    outages = gen_outages(rng, cfg.backhaul.outage_rate_hz,
                          cfg.backhaul.outage_duration_s, cfg.sim_time_s);
  }

  KpiRecord rec;
  rec.scenario = cfg.scenario.label;
  rec.uav_speed_mps = cfg.uav_speed_mps;
  rec.uav_altitude_m = cfg.uav_altitude_m;
  rec.rep = cfg.rep;
  rec.seed = cfg.seed;

  HandoverState patrol_ho;
  HandoverState uav_ho;
  DetectionState uav_det(cfg.detection, dt, /*whitelisted=*/false);
  DetectionState patrol_det(cfg.detection, dt, /*whitelisted=*/true);
  std::optional<CommandOutcome> command;

  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;

    // (1) positions
    const Position patrol_pos = patrol_position(t, world, cfg.mobility);
    const Position uav_pos = uav_position(t, cfg.uav_speed_mps,
                                          cfg.uav_altitude_m, world, cfg.mobility);
    const UePose uav_pose = pose(uav_pos, world);

    // (2) shadowing: patrol cells 0..n-1, then UAV cells 0..n-1
    const RadioSample patrol_sample =
        sample_all(patrol_pos, false, world, cfg.carrier_hz, rng, cfg.radio);
    const RadioSample uav_sample =
        sample_all(uav_pos, true, world, cfg.carrier_hz, rng, cfg.radio);

    if (k == 0) {
      patrol_ho = init_serving(patrol_sample);
      uav_ho = init_serving(uav_sample);
    }

    // (3) handovers; the patrol compares neighbors against its
    // interference-degraded serving cell.
    RadioSample patrol_seen = patrol_sample;
    patrol_seen.rsrp_dbm[static_cast<std::size_t>(patrol_ho.serving_id)] =
        patrol_effective_rsrp(patrol_sample, patrol_ho.serving_id, uav_pos,
                              uav_ho.locked, world, cfg.radio);
    const auto patrol_ev = step_a3(patrol_ho, patrol_seen, t, dt, cfg.handover);
    const auto uav_ev = step_a3(uav_ho, uav_sample, t, dt, cfg.handover);

    // (4) detection
    if (!patrol_det.detected_at_s()) {
      step_detect(patrol_det, patrol_seen, patrol_ho.serving_id, patrol_ev, t,
                  dt, cfg.detection);
    }
    std::optional<double> fired;
    if (!uav_det.detected_at_s()) {
      fired = step_detect(uav_det, uav_sample, uav_ho.serving_id, uav_ev, t, dt,
                          cfg.detection);
    }

    // (5) lockdown command issued at detection through the serving site's
    // backhaul.
    if (fired) {
      BackhaulConfig path_cfg = cfg.backhaul;
      path_cfg.kind =
          world.gnbs[static_cast<std::size_t>(uav_ho.serving_id)].backhaul;
      double latency = 0.0;
      if (path_cfg.kind == Backhaul::LeoSatellite) {
        latency = sample_latency(rng, path_cfg);
        if (trace) trace->command_latency_s = latency;
      }
      command = command_apply_time(t, path_cfg, outages, latency);
    }

    // (6) lock latch at the first step boundary >= t_apply
    if (command && !uav_ho.locked && t >= command->t_apply_s) lock(uav_ho);

    // (7) KPI accumulation
    if (uav_ev) {
      ++rec.uav_total_hos;
      if (command && t > command->t_issue_s && t < command->t_apply_s) {
        ++rec.extra_handovers;
      }
    }
    if (patrol_ev) ++rec.patrol_total_hos;
    if (command && uav_pose.in_corridor && t > command->t_issue_s &&
        t < command->t_apply_s) {
      rec.dwell_before_lock_s += dt;
    }
    if (uav_pose.in_nfz) ++rec.nfz_violation_steps;

    if (trace) {
      trace->uav_samples.push_back(uav_sample);
      trace->uav_serving.push_back(uav_ho.serving_id);
      if (uav_ev) trace->uav_hos.push_back(*uav_ev);
      if (patrol_ev) trace->patrol_hos.push_back(*patrol_ev);
    }
  }

  rec.patrol_ho_rate_per_min = rec.patrol_total_hos / (cfg.sim_time_s / 60.0);
  if (command) {
    rec.detected = true;
    rec.t_detect_s = command->t_issue_s;
    rec.t_apply_s = command->t_apply_s;
    rec.delay_s = command->delay_s();
    rec.path = command->path;
  }
  if (trace) {
    trace->command = command;
    trace->outages = outages;
  }
  return rec;
}

}  // namespace

KpiRecord simulate(const RunConfig& config) { return run(config, nullptr); }

KpiRecord simulate_traced(const RunConfig& config, RunTrace& trace) {
  trace = RunTrace{};
  return run(config, &trace);
}

}  // namespace uavsim
