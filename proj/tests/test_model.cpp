#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "segsched/edf_packer.hpp"
#include "segsched/model.hpp"
#include "testutil.hpp"

using namespace segsched;
using namespace segsched::testutil;

namespace {

// Scenario (c) as a full schedule from t = 0: sigma1 one second on 2L1B,
// suspended while sigma2 does a full 2L1B run, then 2L1B to completion.
Schedule scenario_c_schedule() {
  const auto app1 = motiv_app1();
  const auto app2 = motiv_app2();
  const Job s1 = make_job(0, 0.0, 9.0, app1, 1.0);
  const Job s2 = make_job(1, 1.0, 5.0, app2, 1.0);

  Schedule sched;
  sched.platform = motiv_platform();
  sched.segments = {
      {0.0, 1.0, {{s1, p2L1B}}},
      {1.0, 4.0, {{s2, p2L1B}}},
      {4.0, 8.3, {{s1, p2L1B}}},
  };
  return sched;
}

// Scenario (a): both jobs fixed on 1L1B from t = 1, sigma1 finishing alone.
Schedule scenario_a_schedule() {
  const auto app1 = motiv_app1();
  const auto app2 = motiv_app2();
  const Job s1 = make_job(0, 0.0, 9.0, app1, 1.0);
  const Job s2 = make_job(1, 1.0, 5.0, app2, 1.0);

  const double rho_mid = sigma1_rho_at_t1() - 3.5 / 8.1; // progress at t = 4.5
  const double end = 4.5 + 8.1 * rho_mid;
  Schedule sched;
  sched.platform = motiv_platform();
  sched.segments = {
      {0.0, 1.0, {{s1, p2L1B}}},
      {1.0, 4.5, {{s1, p1L1B}, {s2, p1L1B}}},
      {4.5, end, {{s1, p1L1B}}},
  };
  return sched;
}

} // namespace

TEST_CASE("schedule energy reproduces the three example scenarios") {
  // (c): 8.9/5.3 + 5.73 + 8.9*(1 - 1/5.3) comes to 14.63 exactly.
  CHECK(schedule_energy(scenario_c_schedule()) == doctest::Approx(14.63).epsilon(1e-9));
  CHECK(schedule_energy(scenario_a_schedule()) == doctest::Approx(16.9626415).epsilon(1e-6));

  // (b): remap sigma1 to 2L when sigma2 finishes at 4.5.
  const auto app1 = motiv_app1();
  const auto app2 = motiv_app2();
  const Job s1 = make_job(0, 0.0, 9.0, app1, 1.0);
  const Job s2 = make_job(1, 1.0, 5.0, app2, 1.0);
  const double rho_mid = sigma1_rho_at_t1() - 3.5 / 8.1;
  Schedule b;
  b.platform = motiv_platform();
  b.segments = {
      {0.0, 1.0, {{s1, p2L1B}}},
      {1.0, 4.5, {{s1, p1L1B}, {s2, p1L1B}}},
      {4.5, 4.5 + 10.3 * rho_mid, {{s1, p2L}}},
  };
  CHECK(schedule_energy(b) == doctest::Approx(15.4875).epsilon(1e-4));
}

TEST_CASE("schedule energy of an empty schedule is zero") {
  Schedule empty;
  empty.platform = motiv_platform();
  CHECK(schedule_energy(empty) == 0.0);
}

TEST_CASE("schedule energy rejects malformed schedules") {
  auto sched = scenario_c_schedule();
  SUBCASE("reversed interval") {
    sched.segments[1].end = sched.segments[1].start - 1.0;
    CHECK_THROWS_AS(schedule_energy(sched), std::invalid_argument);
  }
  SUBCASE("gap between segments") {
    sched.segments[2].start += 0.5;
    CHECK_THROWS_AS(schedule_energy(sched), std::invalid_argument);
  }
  SUBCASE("overlapping segments") {
    sched.segments[2].start -= 0.5;
    CHECK_THROWS_AS(schedule_energy(sched), std::invalid_argument);
  }
}

TEST_CASE("validate accepts scenario (c) under both deadline sets") {
  auto sched = scenario_c_schedule();
  const auto app1 = motiv_app1();
  const auto app2 = motiv_app2();
  std::vector<Job> jobs_s1 = {make_job(0, 0.0, 9.0, app1, 1.0), make_job(1, 1.0, 5.0, app2, 1.0)};
  CHECK(validate(sched, jobs_s1, motiv_platform(), 0.0).ok());

  // sigma2 on 2L1B finishes at exactly t = 4, so the tighter S2 deadline holds.
  std::vector<Job> jobs_s2 = {make_job(0, 0.0, 9.0, app1, 1.0), make_job(1, 1.0, 4.0, app2, 1.0)};
  CHECK(validate(sched, jobs_s2, motiv_platform(), 0.0).ok());
}

TEST_CASE("validate reports duplicate assignments") {
  auto sched = scenario_c_schedule();
  sched.segments[0].assignments.push_back(sched.segments[0].assignments[0]);
  const auto report = validate(sched, {make_job(0, 0.0, 9.0, motiv_app1(), 1.0),
                                       make_job(1, 1.0, 5.0, motiv_app2(), 1.0)},
                               motiv_platform(), 0.0);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) found |= v.kind == ViolationKind::duplicate_job;
  CHECK(found);
}

TEST_CASE("validate collects every violation with segment indices") {
  const auto app1 = motiv_app1();
  const auto app2 = motiv_app2();
  const Job s1 = make_job(0, 0.0, 2.0, app1, 1.0); // deadline far too early
  const Job s2 = make_job(1, 0.0, 9.0, app2, 1.0);

  Schedule sched;
  sched.platform = motiv_platform();
  // Oversubscribed segment (2L1B + 2L1B = 4L2B), s2 overshooting its work
  // (5.3/3.0 > 1) and s1 finishing at 5.3 after its deadline of 2.
  sched.segments = {{0.0, 5.3, {{s1, p2L1B}, {s2, p2L1B}}}};

  const auto report = validate(sched, {s1, s2}, motiv_platform(), 0.0);
  REQUIRE_FALSE(report.ok());
  bool overflow = false, mismatch = false, miss = false;
  int overflow_segment = -1;
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::resource_overflow) {
      overflow = true;
      overflow_segment = v.segment_index;
    }
    mismatch |= v.kind == ViolationKind::progress_mismatch;
    miss |= v.kind == ViolationKind::deadline_miss;
  }
  CHECK(overflow);
  CHECK(overflow_segment == 0);
  CHECK(mismatch);
  CHECK(miss);
}

TEST_CASE("validate accepts jobs that are suspended in some segments") {
  // Scenario (c) suspends sigma1 during [1, 4).
  CHECK(validate(scenario_c_schedule(),
                 {make_job(0, 0.0, 9.0, motiv_app1(), 1.0),
                  make_job(1, 1.0, 5.0, motiv_app2(), 1.0)},
                 motiv_platform(), 0.0)
            .ok());
}

TEST_CASE("validate flags a first segment that misses the activation time") {
  auto sched = scenario_c_schedule();
  const auto report = validate(sched, {make_job(0, 0.0, 9.0, motiv_app1(), 1.0),
                                       make_job(1, 1.0, 5.0, motiv_app2(), 1.0)},
                               motiv_platform(), 1.0);
  bool structural = false;
  for (const auto& v : report.violations) structural |= v.kind == ViolationKind::structural;
  CHECK(structural);
}

TEST_CASE("job remaining time scales linearly with the remaining ratio") {
  const auto app1 = motiv_app1();
  const Job fresh = make_job(0, 0.0, 9.0, app1, 1.0);
  CHECK(job_remaining_time(fresh, app1->points[p2L1B]) == 5.3);

  const Job at_t1 = make_job(0, 0.0, 9.0, app1, sigma1_rho_at_t1());
  CHECK(job_remaining_time(at_t1, app1->points[p2L1B]) == doctest::Approx(4.30).epsilon(5e-3));

  const Job late = make_job(0, 0.0, 9.0, app1, 0.3792219892848823);
  CHECK(job_remaining_time(late, app1->points[p1L1B]) == doctest::Approx(3.07).epsilon(5e-3));
}

TEST_CASE("all Table-style state triples scale linearly within 1%") {
  // Progress states published for the first application: 18.87% and 62.08%,
  // with time and energy triples per point.
  struct Triple {
    MotivPoint point;
    double tau_mid, xi_mid, tau_late, xi_late;
  };
  const std::vector<Triple> triples = {
      {p1L, 13.63, 6.41, 6.37, 3.00},   {p2L, 8.36, 5.69, 3.91, 2.66},
      {p1B, 9.09, 15.04, 4.25, 7.03},   {p2B, 5.11, 14.36, 2.39, 6.71},
      {p1L1B, 6.57, 8.84, 3.07, 4.13},  {p1L2B, 6.41, 8.60, 3.00, 4.02},
      {p2L1B, 4.30, 7.22, 2.01, 3.38},  {p2L2B, 3.81, 8.92, 1.78, 4.17},
  };
  const auto app1 = motiv_app1();
  const double rho_mid = 1.0 - 0.1887;
  const double rho_late = 1.0 - 0.6208;
  for (const auto& t : triples) {
    const auto& p = app1->points[t.point];
    CHECK(std::abs(p.exec_time * rho_mid - t.tau_mid) / t.tau_mid < 0.01);
    CHECK(std::abs(p.energy * rho_mid - t.xi_mid) / t.xi_mid < 0.01);
    CHECK(std::abs(p.exec_time * rho_late - t.tau_late) / t.tau_late < 0.01);
    CHECK(std::abs(p.energy * rho_late - t.xi_late) / t.xi_late < 0.01);
  }
}

TEST_CASE("pareto_filter keeps all points of both example applications") {
  const auto app1 = motiv_app1();
  const auto app2 = motiv_app2();
  CHECK(pareto_filter(app1->points).size() == 8);
  CHECK(pareto_filter(app2->points).size() == 8);
  CHECK(same_points(pareto_filter(app2->points), brute_force_pareto(app2->points)));
}

TEST_CASE("pareto_filter drops a strictly dominated point") {
  const std::vector<OperatingPoint> points = {{{1, 0}, 10.0, 5.0}, {{1, 0}, 12.0, 6.0}};
  const auto kept = pareto_filter(points);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].exec_time == 10.0);
}

TEST_CASE("pareto_filter is idempotent, order-stable, and rejects empty input") {
  const auto app2 = motiv_app2();
  const auto once = pareto_filter(app2->points);
  CHECK(same_points(once, pareto_filter(once)));

  const std::vector<OperatingPoint> single = {{{1, 1}, 2.0, 3.0}};
  CHECK(same_points(pareto_filter(single), single));

  CHECK_THROWS_AS(pareto_filter({}), std::invalid_argument);
}

TEST_CASE("pareto_filter matches the brute-force oracle on random point sets") {
  std::mt19937_64 rng(7);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<OperatingPoint> points;
    const int n = draw(1, 10);
    for (int i = 0; i < n; ++i) {
      points.push_back({{draw(0, 2), draw(0, 2)}, 1.0 + draw(0, 8), 1.0 + draw(0, 8)});
      if (points.back().resources[0] + points.back().resources[1] == 0) {
        points.back().resources[0] = 1;
      }
    }
    const auto filtered = pareto_filter(points);
    CHECK(same_points(filtered, brute_force_pareto(points)));
    // No dominated pair may survive.
    CHECK(same_points(filtered, brute_force_pareto(filtered)));
  }
}

TEST_CASE("splitting a segment anywhere preserves schedule energy") {
  std::mt19937_64 rng(11);
  auto u01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const auto app1 = motiv_app1();
  const auto app2 = motiv_app2();

  for (int trial = 0; trial < 100; ++trial) {
    const Job a = make_job(0, 0.0, 100.0, app1, 0.1 + 0.9 * u01());
    const Job b = make_job(1, 0.0, 100.0, app2, 0.1 + 0.9 * u01());
    Schedule sched;
    sched.platform = motiv_platform();
    const double len = 0.5 + 5.0 * u01();
    sched.segments = {{0.0, len, {{a, p1L}, {b, p1B}}}};
    const double before = schedule_energy(sched);

    const double at = len * (0.1 + 0.8 * u01());
    auto [left, right] = split_segment(sched.segments[0], at);
    Schedule split;
    split.platform = sched.platform;
    split.segments = {left, right};
    CHECK(schedule_energy(split) == doctest::Approx(before).epsilon(1e-12));
  }
}
