#ifndef SEGSCHED_TESTS_TESTUTIL_HPP
#define SEGSCHED_TESTS_TESTUTIL_HPP

#include <memory>
#include <string>
#include <vector>

#include "segsched/model.hpp"

namespace segsched::testutil {

// The two-application example platform: 2 little + 2 big cores.
inline Platform motiv_platform() { return {{2, 2}, {"L", "B"}}; }

// Point order: 1L, 2L, 1B, 2B, 1L1B, 1L2B, 2L1B, 2L2B.
enum MotivPoint { p1L = 0, p2L, p1B, p2B, p1L1B, p1L2B, p2L1B, p2L2B };

inline ProfilePtr motiv_app1() {
  auto app = std::make_shared<ApplicationProfile>();
  app->name = "lambda1";
  app->points = {
      {{1, 0}, 16.8, 7.90}, {{2, 0}, 10.3, 7.01}, {{0, 1}, 11.2, 18.54}, {{0, 2}, 6.3, 17.70},
      {{1, 1}, 8.1, 10.90}, {{1, 2}, 7.9, 10.60}, {{2, 1}, 5.3, 8.90},   {{2, 2}, 4.7, 11.00},
  };
  return app;
}

inline ProfilePtr motiv_app2() {
  auto app = std::make_shared<ApplicationProfile>();
  app->name = "lambda2";
  app->points = {
      {{1, 0}, 10.0, 2.00}, {{2, 0}, 7.0, 2.87}, {{0, 1}, 5.0, 7.55},  {{0, 2}, 3.5, 10.5},
      {{1, 1}, 3.5, 6.44},  {{1, 2}, 3.0, 6.81}, {{2, 1}, 3.0, 5.73},  {{2, 2}, 2.0, 6.58},
  };
  return app;
}

inline ProfilePtr make_app(const std::string& name, std::vector<OperatingPoint> points) {
  auto app = std::make_shared<ApplicationProfile>();
  app->name = name;
  app->points = std::move(points);
  return app;
}

inline Job make_job(int id, double arrival, double deadline, ProfilePtr app, double rho = 1.0) {
  return {id, arrival, deadline, std::move(app), rho};
}

// Progress of sigma1 at t = 1 after one second on 2L1B (tau = 5.3).
inline double sigma1_rho_at_t1() { return 1.0 - 1.0 / 5.3; }

// sigma1/sigma2 of the example at the t = 1 activation; S1 gives sigma2 a
// deadline of 5, S2 tightens it to 4.
inline std::vector<Job> scenario_jobs(double sigma2_deadline) {
  return {make_job(0, 0.0, 9.0, motiv_app1(), sigma1_rho_at_t1()),
          make_job(1, 1.0, sigma2_deadline, motiv_app2(), 1.0)};
}

// Independent of pareto_filter: counts dominators over all ordered pairs.
inline std::vector<OperatingPoint> brute_force_pareto(const std::vector<OperatingPoint>& points) {
  std::vector<OperatingPoint> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    int dominators = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const auto& a = points[j];
      const auto& b = points[i];
      bool all_le = a.exec_time <= b.exec_time && a.energy <= b.energy;
      bool any_lt = a.exec_time < b.exec_time || a.energy < b.energy;
      for (std::size_t r = 0; r < a.resources.size(); ++r) {
        all_le = all_le && a.resources[r] <= b.resources[r];
        any_lt = any_lt || a.resources[r] < b.resources[r];
      }
      if (all_le && any_lt) ++dominators;
    }
    if (dominators == 0) kept.push_back(points[i]);
  }
  return kept;
}

inline bool same_points(const std::vector<OperatingPoint>& a,
                        const std::vector<OperatingPoint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].resources != b[i].resources || a[i].exec_time != b[i].exec_time ||
        a[i].energy != b[i].energy) {
      return false;
    }
  }
  return true;
}

} // namespace segsched::testutil

#endif // SEGSCHED_TESTS_TESTUTIL_HPP
