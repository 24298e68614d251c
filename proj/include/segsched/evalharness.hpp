#ifndef SEGSCHED_EVALHARNESS_HPP
#define SEGSCHED_EVALHARNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segsched/algorithms.hpp"
#include "segsched/workload.hpp"

namespace segsched {

/// Outcome of one (test case, algorithm) run.
struct EvalRecord {
  std::string test_id;
  std::string algo;
  bool feasible = false;
  std::string reason;           // set when infeasible: "rejected" or "budget-exceeded"
  std::optional<double> energy; // present iff feasible
  double wall_seconds = 0.0;    // scheduler call only
  int job_count = 0;
  DeadlineLevel level = DeadlineLevel::weak;
};

/// Runs every algorithm on every case. Each feasible schedule is re-checked
/// by the constraint validator; a violation is a bug in the scheduler and
/// aborts with std::runtime_error naming the algorithm and case.
std::vector<EvalRecord> run_suite(const std::vector<TestCase>& cases,
                                  const std::vector<NamedScheduler>& algos,
                                  const Platform& platform);

struct GeomeanCell {
  int job_count = 0;
  DeadlineLevel level = DeadlineLevel::weak;
  std::optional<double> value; // absent when no case is feasible under both
  int case_count = 0;
};

/// Geometric means of energy(algo)/energy(baseline) per (job count, deadline
/// level) cell, plus per-level and overall rows. Only cases feasible under
/// both algorithms enter a mean.
struct GeomeanTable {
  std::string algo;
  std::string baseline;
  std::vector<GeomeanCell> cells;
  std::optional<double> overall_weak;
  std::optional<double> overall_tight;
  std::optional<double> overall;
};

std::vector<GeomeanTable> relative_energy_geomean(const std::vector<EvalRecord>& records,
                                                  const std::string& baseline);

/// Sorted energy ratios of one algorithm against the baseline (ascending).
std::vector<double> scurve(const std::vector<EvalRecord>& records, const std::string& algo,
                           const std::string& baseline);

/// Five-number summary plus mean of the per-record wall times, in seconds.
struct TimingStats {
  std::string algo;
  int count = 0;
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

std::vector<TimingStats> timing_stats(const std::vector<EvalRecord>& records);

} // namespace segsched

#endif // SEGSCHED_EVALHARNESS_HPP
