#ifndef SEGSCHED_BASELINES_HPP
#define SEGSCHED_BASELINES_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "segsched/model.hpp"
#include "segsched/result.hpp"

namespace segsched {

struct ExMemOptions {
  // Combination evaluations allowed before the search gives up. 0 = unlimited.
  std::uint64_t node_budget = 20'000'000;
};

/// Exhaustive segment-by-segment search with memoization: at each state every
/// assignment of each live job to one of its points or to SUSPENDED is tried
/// (at least one job running, resource sums within the platform), the segment
/// is cut at the earliest completion among running jobs, and the best
/// remaining energy per (job progress vector, time) state is memoized.
///
/// The memo table lives in the solver, so re-solving the same instance on the
/// same solver visits no new nodes. Use the ex_mem() wrapper for one-shot
/// calls.
class ExMemSolver {
 public:
  ExMemSolver(std::vector<Job> jobs, Platform platform, ExMemOptions options = {});

  ScheduleResult solve(double t_now);

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct StateKey {
    std::vector<std::pair<int, std::int64_t>> progress; // (job id, quantized rho), id-sorted
    std::int64_t time = 0;

    bool operator==(const StateKey& other) const {
      return time == other.time && progress == other.progress;
    }
  };
  struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const;
  };
  struct StateEntry {
    double best_energy = 0.0;          // +inf when infeasible from this state
    std::vector<int> choice;           // per job: point index, -1 suspended, -2 not live
  };

  double solve_state(std::vector<double>& rho, double t);
  StateKey make_key(const std::vector<double>& rho, double t) const;

  std::vector<Job> jobs_;
  Platform platform_;
  ExMemOptions options_;
  std::vector<std::vector<int>> usable_points_; // per job, points that fit the platform
  std::vector<double> min_exec_;                // per job, fastest usable full-run time
  std::unordered_map<StateKey, StateEntry, StateKeyHash> memo_;
  std::uint64_t nodes_ = 0;
};

ScheduleResult ex_mem(const std::vector<Job>& jobs, const Platform& platform, double t_now,
                      ExMemOptions options = {});

/// Lagrange multipliers per resource type, from the projected subgradient
/// iteration on the core-second knapsack relaxation.
struct LrMultipliers {
  std::vector<double> values;
};

LrMultipliers solve_lr_multipliers(const std::vector<Job>& jobs, const Platform& platform,
                                   double t_now, int max_iterations = 100);

/// Lagrangian-relaxation heuristic with a single-segment analysis scope: per
/// segment, multipliers from the subgradient iteration price the points, jobs
/// are placed in increasing order of their minimum Lagrangian cost, each on
/// the first point that fits the remaining cores and passes the optimistic
/// deadline check, and the segment closes at the earliest completion among
/// the placed jobs.
ScheduleResult mmkp_lr(const std::vector<Job>& jobs, const Platform& platform, double t_now);

/// Fixed-mapping baseline: one configuration per job for its whole remaining
/// run, all jobs started concurrently at t_now (completions still split the
/// schedule into segments). Picks the minimum-energy joint assignment by
/// exhaustive search; rejects when no joint assignment meets all deadlines.
ScheduleResult fixed_best(const std::vector<Job>& jobs, const Platform& platform, double t_now);

} // namespace segsched

#endif // SEGSCHED_BASELINES_HPP
