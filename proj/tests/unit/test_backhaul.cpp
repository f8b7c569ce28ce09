#include <doctest.h>

#include <cmath>
#include <vector>

#include "uavsim/backhaul.hpp"

using namespace uavsim;

namespace {

BackhaulConfig leo(bool fallback) {
  BackhaulConfig cfg;
  cfg.kind = Backhaul::LeoSatellite;
  cfg.fallback_enabled = fallback;
  return cfg;
}

}  // namespace

TEST_CASE("zero rate draws nothing") {
  Rng rng(1);
  CHECK(gen_outage_arrivals(rng, 0.0, 200).empty());
  CHECK(gen_outages(rng, 0.0, 5, 200).intervals.empty());
}

TEST_CASE("overlapping outages merge") {
  const auto s = merge_outages({10, 12}, 5);
  REQUIRE(s.intervals.size() == 1);
  CHECK(s.intervals[0] == Interval{10, 17});

  const auto apart = merge_outages({30, 10, 16}, 5);
  REQUIRE(apart.intervals.size() == 3);
  CHECK(apart.intervals[0] == Interval{10, 15});
  CHECK(apart.intervals[1] == Interval{16, 21});

  const auto chain = merge_outages({1, 4, 7, 50}, 5);
  REQUIRE(chain.intervals.size() == 2);
  CHECK(chain.intervals[0] == Interval{1, 12});
}

TEST_CASE("merging is idempotent and yields sorted disjoint intervals") {
  Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const auto s = gen_outages(rng, 0.05, 10, 200);
    for (std::size_t k = 0; k < s.intervals.size(); ++k) {
      CHECK(s.intervals[k].start_s < s.intervals[k].end_s);
      CHECK(s.intervals[k].start_s >= 0.0);
      CHECK(s.intervals[k].end_s <= 210.0);
      if (k > 0) CHECK(s.intervals[k - 1].end_s < s.intervals[k].start_s);
    }
    CHECK(merge_intervals(s.intervals) == s);
  }
}

TEST_CASE("arrival count matches the Poisson mean") {
  long total = 0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(static_cast<std::uint64_t>(s) * 7919 + 1);
    const auto a = gen_outage_arrivals(rng, 0.02, 200);
    for (std::size_t k = 1; k < a.size(); ++k) REQUIRE(a[k - 1] < a[k]);
    if (!a.empty()) REQUIRE(a.back() <= 200.0);
    total += static_cast<long>(a.size());
  }
  const double mean = static_cast<double>(total) / seeds;
  CHECK(mean >= 3.8);
  CHECK(mean <= 4.2);
}

TEST_CASE("in_outage excludes both endpoints") {
  const OutageSchedule s{{{10, 17}, {40, 45}}};
  CHECK_FALSE(in_outage(s, 5));
  CHECK_FALSE(in_outage(s, 10));
  CHECK(in_outage(s, 10.001));
  CHECK(in_outage(s, 13.5));
  CHECK_FALSE(in_outage(s, 17));
  CHECK_FALSE(in_outage(s, 30));
  CHECK(in_outage(s, 42.5));
  CHECK_FALSE(in_outage(s, 45));
  CHECK_FALSE(in_outage(s, 100));
  CHECK_FALSE(in_outage(OutageSchedule{}, 1));
  CHECK(covering_interval(s, 42) == Interval{40, 45});
  CHECK_FALSE(covering_interval(s, 20));
}

TEST_CASE("latency draws") {
  BackhaulConfig cfg = leo(false);
  cfg.latency_jitter_s = 0;
  Rng rng(3);
  CHECK(sample_latency(rng, cfg) == 0.030);

  cfg.latency_mean_s = -0.01;
  CHECK(sample_latency(rng, cfg) == kMinLatencyS);

  const BackhaulConfig nominal = leo(false);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double l = sample_latency(rng, nominal);
    REQUIRE(l >= kMinLatencyS);
    sum += l;
  }
  CHECK(std::abs(sum / 10000 - 0.030) <= 0.001);
}

TEST_CASE("command apply time") {
  BackhaulConfig terr;
  const OutageSchedule down{{{48, 58}}};
  auto o = command_apply_time(50, terr, down, 0.5);
  CHECK(o == CommandOutcome{50, 50, MitigationPath::Immediate});
  CHECK(o.delay_s() == 0.0);

  o = command_apply_time(50, leo(false), OutageSchedule{}, 0.031);
  CHECK(o.t_apply_s == doctest::Approx(50.031));
  CHECK(o.path == MitigationPath::Remote);

  o = command_apply_time(50, leo(true), down, 0.03);
  CHECK(o == CommandOutcome{50, 52.0, MitigationPath::Fallback});

  o = command_apply_time(50, leo(false), down, 0.03);
  CHECK(o == CommandOutcome{50, 58, MitigationPath::Remote});

  // blocked, but the outage ends before the deadline
  o = command_apply_time(57, leo(true), down, 0.03);
  CHECK(o == CommandOutcome{57, 58, MitigationPath::Remote});

  // nominal arrival lands exactly on the outage end
  o = command_apply_time(57.97, leo(false), down, 0.03);
  CHECK(o.t_apply_s == doctest::Approx(58.0));
  CHECK(o.path == MitigationPath::Remote);
}

TEST_CASE("delay bounds hold on random schedules") {
  Rng rng(99);
  for (int i = 0; i < 5000; ++i) {
    const auto s = gen_outages(rng, 0.05, 10, 200);
    // issue instants sit on the 0.5 s step grid, as in the engine
    const double t = static_cast<double>(rng.index(400)) * 0.5;
    const double lat = sample_latency(rng, leo(false));
    const auto fb = command_apply_time(t, leo(true), s, lat);
    CHECK(fb.t_apply_s >= fb.t_issue_s);
    CHECK(fb.delay_s() <= 2.0);

    const auto nofb = command_apply_time(t, leo(false), s, lat);
    CHECK(nofb.t_apply_s >= nofb.t_issue_s);
    const auto iv = covering_interval(s, t + lat);
    CHECK(nofb.delay_s() <= lat + (iv ? iv->length() : 0.0) + 1e-12);
    if (!iv) CHECK(nofb.delay_s() == doctest::Approx(lat));
  }
}
