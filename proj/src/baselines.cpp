#include "segsched/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace segsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuantum = 1e-9; // memo grid for ratios and time

struct BudgetExhausted {};

std::int64_t quantize(double x) { return std::llround(x / kQuantum); }

} // namespace

std::size_t ExMemSolver::StateKeyHash::operator()(const StateKey& key) const {
  auto mix = [](std::size_t h, std::uint64_t v) {
    v *= 0x9e3779b97f4a7c15ull;
    v ^= v >> 32;
    return h * 0x100000001b3ull ^ v;
  };
  std::size_t h = 0xcbf29ce484222325ull;
  h = mix(h, static_cast<std::uint64_t>(key.time));
  for (const auto& [id, q] : key.progress) {
    h = mix(h, static_cast<std::uint64_t>(id));
    h = mix(h, static_cast<std::uint64_t>(q));
  }
  return h;
}

ExMemSolver::ExMemSolver(std::vector<Job> jobs, Platform platform, ExMemOptions options)
    : jobs_(std::move(jobs)), platform_(std::move(platform)), options_(options) {
  std::sort(jobs_.begin(), jobs_.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
  usable_points_.resize(jobs_.size());
  min_exec_.resize(jobs_.size(), kInf);
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    const auto& pts = jobs_[j].app->points;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (!fits_platform(pts[p], platform_)) continue;
      usable_points_[j].push_back(static_cast<int>(p));
      min_exec_[j] = std::min(min_exec_[j], pts[p].exec_time);
    }
  }
}

ExMemSolver::StateKey ExMemSolver::make_key(const std::vector<double>& rho, double t) const {
  StateKey key;
  key.time = quantize(t);
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    if (rho[j] > 0.0) key.progress.emplace_back(jobs_[j].id, quantize(rho[j]));
  }
  return key;
}

double ExMemSolver::solve_state(std::vector<double>& rho, double t) {
  const std::size_t n = jobs_.size();

  bool any_live = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (rho[j] <= 0.0) continue;
    any_live = true;
    // A live job that cannot finish by its deadline even on its fastest point
    // makes the whole state infeasible.
    if (t + min_exec_[j] * rho[j] > jobs_[j].deadline + kEps) return kInf;
  }
  if (!any_live) return 0.0;

  const StateKey key = make_key(rho, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.best_energy;

  StateEntry entry;
  entry.best_energy = kInf;
  entry.choice.assign(n, -2);

  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < n; ++j) {
    if (rho[j] > 0.0) live.push_back(j);
  }

  const std::size_t m = platform_.num_types();
  std::vector<int> choice(live.size(), -1);
  std::vector<long> used(m, 0);

  // Enumerate every combination of per-job choices (a point or SUSPENDED),
  // pruning on the resource sums as the combination is built.
  auto enumerate = [&](auto&& self, std::size_t idx) -> void {
    if (idx == live.size()) {
      bool any_running = false;
      double cut_len = kInf;
      for (std::size_t k = 0; k < live.size(); ++k) {
        if (choice[k] < 0) continue;
        any_running = true;
        const auto& p = jobs_[live[k]].app->points[static_cast<std::size_t>(choice[k])];
        cut_len = std::min(cut_len, p.exec_time * rho[live[k]]);
      }
      if (!any_running) return;

      if (options_.node_budget != 0 && ++nodes_ > options_.node_budget) throw BudgetExhausted{};

      // Jobs completing at the cut must still meet their deadline.
      const double t_cut = t + cut_len;
      double seg_energy = 0.0;
      for (std::size_t k = 0; k < live.size(); ++k) {
        if (choice[k] < 0) continue;
        const std::size_t j = live[k];
        const auto& p = jobs_[j].app->points[static_cast<std::size_t>(choice[k])];
        if (p.exec_time * rho[j] <= cut_len + kEps && t_cut > jobs_[j].deadline + kEps) return;
        seg_energy += p.energy * cut_len / p.exec_time;
      }

      std::vector<double> next(rho);
      for (std::size_t k = 0; k < live.size(); ++k) {
        if (choice[k] < 0) continue;
        const std::size_t j = live[k];
        const auto& p = jobs_[j].app->points[static_cast<std::size_t>(choice[k])];
        next[j] = rho[j] - cut_len / p.exec_time;
        if (next[j] * p.exec_time <= kEps) next[j] = 0.0;
      }

      const double value = seg_energy + solve_state(next, t_cut);
      if (value < entry.best_energy) {
        entry.best_energy = value;
        for (std::size_t k = 0; k < live.size(); ++k) entry.choice[live[k]] = choice[k];
      }
      return;
    }

    const std::size_t j = live[idx];
    choice[idx] = -1; // suspended
    self(self, idx + 1);
    for (int p : usable_points_[j]) {
      const auto& res = jobs_[j].app->points[static_cast<std::size_t>(p)].resources;
      bool fits = true;
      for (std::size_t r = 0; r < m; ++r) {
        if (used[r] + res[r] > platform_.resource_counts[r]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t r = 0; r < m; ++r) used[r] += res[r];
      choice[idx] = p;
      self(self, idx + 1);
      for (std::size_t r = 0; r < m; ++r) used[r] -= res[r];
    }
    choice[idx] = -1;
  };
  enumerate(enumerate, 0);

  memo_.emplace(key, entry);
  return entry.best_energy;
}

ScheduleResult ExMemSolver::solve(double t_now) {
  std::vector<double> rho(jobs_.size());
  for (std::size_t j = 0; j < jobs_.size(); ++j) rho[j] = jobs_[j].remaining_ratio;

  double best;
  try {
    best = solve_state(rho, t_now);
  } catch (const BudgetExhausted&) {
    return ScheduleResult::out_of_budget();
  }
  if (!std::isfinite(best)) return ScheduleResult::reject();

  // Replay the memoized choices to materialize the schedule.
  Schedule schedule;
  schedule.platform = platform_;
  double t = t_now;
  while (true) {
    bool any_live = false;
    for (double r : rho) any_live |= r > 0.0;
    if (!any_live) break;

    const auto it = memo_.find(make_key(rho, t));
    if (it == memo_.end()) throw std::logic_error("ex_mem: missing memo entry on replay");
    const auto& choice = it->second.choice;

    MappingSegment seg;
    double cut_len = kInf;
    for (std::size_t j = 0; j < jobs_.size(); ++j) {
      if (choice[j] < 0) continue;
      const auto& p = jobs_[j].app->points[static_cast<std::size_t>(choice[j])];
      cut_len = std::min(cut_len, p.exec_time * rho[j]);
    }
    seg.start = t;
    seg.end = t + cut_len;
    for (std::size_t j = 0; j < jobs_.size(); ++j) {
      if (choice[j] < 0) continue;
      const auto& p = jobs_[j].app->points[static_cast<std::size_t>(choice[j])];
      seg.assignments.push_back({jobs_[j], choice[j]});
      rho[j] -= cut_len / p.exec_time;
      if (rho[j] * p.exec_time <= kEps) rho[j] = 0.0;
    }
    t = seg.end;
    schedule.segments.push_back(std::move(seg));
  }

  return ScheduleResult::accept(std::move(schedule));
}

ScheduleResult ex_mem(const std::vector<Job>& jobs, const Platform& platform, double t_now,
                      ExMemOptions options) {
  ExMemSolver solver(jobs, platform, options);
  return solver.solve(t_now);
}

// ---------------------------------------------------------------------------
// MMKP-LR
// ---------------------------------------------------------------------------

namespace {

double lagrangian_cost(const Job& job, const OperatingPoint& point,
                       const std::vector<double>& mult) {
  double cost = point.energy * job.remaining_ratio;
  const double work = point.exec_time * job.remaining_ratio;
  for (std::size_t r = 0; r < mult.size(); ++r) cost += mult[r] * point.resources[r] * work;
  return cost;
}

// Pricing items: points that fit the platform and whose core-second demand
// does not exceed the capacity on its own (an oversized item can never be
// part of a feasible knapsack selection).
std::vector<int> pricing_items(const Job& job, const Platform& platform,
                               const std::vector<double>& capacity) {
  std::vector<int> out;
  for (std::size_t p = 0; p < job.app->points.size(); ++p) {
    const auto& point = job.app->points[p];
    if (!fits_platform(point, platform)) continue;
    const double work = point.exec_time * job.remaining_ratio;
    bool oversized = false;
    for (std::size_t r = 0; r < capacity.size(); ++r) {
      if (point.resources[r] * work > capacity[r] + kEps) {
        oversized = true;
        break;
      }
    }
    if (!oversized) out.push_back(static_cast<int>(p));
  }
  return out;
}

} // namespace

LrMultipliers solve_lr_multipliers(const std::vector<Job>& jobs, const Platform& platform,
                                   double t_now, int max_iterations) {
  const std::size_t m = platform.num_types();

  double horizon = 0.0;
  for (const auto& job : jobs) horizon = std::max(horizon, job.deadline - t_now);
  std::vector<double> capacity(m);
  for (std::size_t r = 0; r < m; ++r) capacity[r] = platform.resource_counts[r] * horizon;

  std::vector<std::vector<int>> items;
  items.reserve(jobs.size());
  for (const auto& job : jobs) items.push_back(pricing_items(job, platform, capacity));

  // Primal upper bound: greedy feasible selection by ascending energy, with a
  // loose fallback when the greedy pass cannot fit every job.
  double upper = 0.0;
  {
    std::vector<double> left(capacity);
    bool complete = true;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      std::vector<int> order(items[j]);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return jobs[j].app->points[static_cast<std::size_t>(a)].energy <
               jobs[j].app->points[static_cast<std::size_t>(b)].energy;
      });
      bool placed = false;
      for (int p : order) {
        const auto& point = jobs[j].app->points[static_cast<std::size_t>(p)];
        const double work = point.exec_time * jobs[j].remaining_ratio;
        bool fits = true;
        for (std::size_t r = 0; r < m; ++r) {
          if (point.resources[r] * work > left[r] + kEps) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        for (std::size_t r = 0; r < m; ++r) left[r] -= point.resources[r] * work;
        upper += point.energy * jobs[j].remaining_ratio;
        placed = true;
        break;
      }
      if (!placed) complete = false;
    }
    if (!complete) {
      upper = 0.0;
      for (std::size_t j = 0; j < jobs.size(); ++j) {
        double worst = 0.0;
        for (int p : items[j]) {
          worst = std::max(worst, jobs[j].app->points[static_cast<std::size_t>(p)].energy *
                                      jobs[j].remaining_ratio);
        }
        upper += worst;
      }
    }
  }

  std::vector<double> mult(m, 0.0);
  std::vector<double> best_mult(mult);
  double best_bound = -kInf;
  double step_scale = 1.0;
  int non_improving = 0;

  for (int iter = 0; iter < max_iterations; ++iter) {
    // Relaxed solution: each job independently picks its cheapest priced item.
    double bound = 0.0;
    std::vector<double> subgrad(m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      bound -= mult[r] * capacity[r];
      subgrad[r] = -capacity[r];
    }
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      if (items[j].empty()) continue;
      int best_p = items[j].front();
      double best_c = lagrangian_cost(jobs[j], jobs[j].app->points[static_cast<std::size_t>(best_p)], mult);
      for (int p : items[j]) {
        const double c = lagrangian_cost(jobs[j], jobs[j].app->points[static_cast<std::size_t>(p)], mult);
        if (c < best_c) {
          best_c = c;
          best_p = p;
        }
      }
      bound += best_c;
      const auto& point = jobs[j].app->points[static_cast<std::size_t>(best_p)];
      const double work = point.exec_time * jobs[j].remaining_ratio;
      for (std::size_t r = 0; r < m; ++r) subgrad[r] += point.resources[r] * work;
    }

    if (bound > best_bound + kEps) {
      best_bound = bound;
      best_mult = mult;
      non_improving = 0;
    } else if (++non_improving >= 5) {
      step_scale *= 0.5;
      non_improving = 0;
    }

    double norm2 = 0.0;
    for (std::size_t r = 0; r < m; ++r) norm2 += subgrad[r] * subgrad[r];
    if (norm2 <= kEps) break; // dual optimum: nowhere to move

    const double gap = std::max(upper - bound, 0.0);
    if (gap <= kEps) break;
    const double step = step_scale * gap / norm2;
    for (std::size_t r = 0; r < m; ++r) mult[r] = std::max(0.0, mult[r] + step * subgrad[r]);
  }

  return {best_mult};
}

ScheduleResult mmkp_lr(const std::vector<Job>& jobs, const Platform& platform, double t_now) {
  const std::size_t m = platform.num_types();

  struct Live {
    Job job;
    double min_exec; // fastest platform-fitting full-run time
  };
  std::vector<Live> live;
  for (const auto& job : jobs) {
    double fastest = kInf;
    for (const auto& point : job.app->points) {
      if (fits_platform(point, platform)) fastest = std::min(fastest, point.exec_time);
    }
    if (!std::isfinite(fastest)) return ScheduleResult::reject(); // no point fits at all
    live.push_back({job, fastest});
  }

  Schedule schedule;
  schedule.platform = platform;
  double t = t_now;

  while (!live.empty()) {
    // A survivor that cannot finish even on its fastest point is lost; the
    // optimistic admissions of earlier segments surface here as a rejection.
    for (const auto& lv : live) {
      if (t + lv.min_exec * lv.job.remaining_ratio > lv.job.deadline + kEps) {
        return ScheduleResult::reject();
      }
    }

    std::vector<Job> current;
    current.reserve(live.size());
    for (const auto& lv : live) current.push_back(lv.job);
    const std::vector<double> mult = solve_lr_multipliers(current, platform, t).values;

    // Place jobs in increasing order of their minimum Lagrangian cost.
    std::vector<std::size_t> order(live.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> min_cost(live.size(), kInf);
    for (std::size_t k = 0; k < live.size(); ++k) {
      for (const auto& point : live[k].job.app->points) {
        if (!fits_platform(point, platform)) continue;
        min_cost[k] = std::min(min_cost[k], lagrangian_cost(live[k].job, point, mult));
      }
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (min_cost[a] != min_cost[b]) return min_cost[a] < min_cost[b];
      if (live[a].job.deadline != live[b].job.deadline) {
        return live[a].job.deadline < live[b].job.deadline;
      }
      return live[a].job.id < live[b].job.id;
    });

    std::vector<long> remaining(m);
    for (std::size_t r = 0; r < m; ++r) remaining[r] = platform.resource_counts[r];

    struct Placed {
      std::size_t live_idx;
      int point_idx;
      double completion;
    };
    std::vector<Placed> placed;
    double earliest_completion = kInf;

    for (std::size_t k : order) {
      const Job& job = live[k].job;
      std::vector<int> scan;
      for (std::size_t p = 0; p < job.app->points.size(); ++p) {
        if (fits_platform(job.app->points[p], platform)) scan.push_back(static_cast<int>(p));
      }
      std::stable_sort(scan.begin(), scan.end(), [&](int a, int b) {
        return lagrangian_cost(job, job.app->points[static_cast<std::size_t>(a)], mult) <
               lagrangian_cost(job, job.app->points[static_cast<std::size_t>(b)], mult);
      });

      for (int p : scan) {
        const auto& point = job.app->points[static_cast<std::size_t>(p)];
        bool fits = true;
        for (std::size_t r = 0; r < m; ++r) {
          if (point.resources[r] > remaining[r]) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;

        const double completion = t + point.exec_time * job.remaining_ratio;
        const bool to_end_ok = completion <= job.deadline + kEps;
        // Optimistic arm: an already placed job finishes first, giving this
        // one a chance to reconfigure; the fastest point could then still
        // meet the deadline.
        const bool reconfig_ok = earliest_completion < completion - kEps &&
                                 t + live[k].min_exec * job.remaining_ratio <= job.deadline + kEps;
        if (!to_end_ok && !reconfig_ok) continue;

        for (std::size_t r = 0; r < m; ++r) remaining[r] -= point.resources[r];
        placed.push_back({k, p, completion});
        earliest_completion = std::min(earliest_completion, completion);
        break;
      }
      // A job with no acceptable point this segment waits for the next one;
      // the top-of-loop check rejects it once waiting can no longer help.
    }

    if (placed.empty()) return ScheduleResult::reject(); // no progress possible

    MappingSegment seg;
    seg.start = t;
    seg.end = earliest_completion;
    for (const auto& pl : placed) seg.assignments.push_back({live[pl.live_idx].job, pl.point_idx});
    schedule.segments.push_back(seg);

    const double seg_len = earliest_completion - t;
    std::vector<bool> done(live.size(), false);
    for (const auto& pl : placed) {
      Live& lv = live[pl.live_idx];
      const auto& point = lv.job.app->points[static_cast<std::size_t>(pl.point_idx)];
      lv.job.remaining_ratio -= seg_len / point.exec_time;
      if (lv.job.remaining_ratio * point.exec_time <= kEps) {
        lv.job.remaining_ratio = 0.0;
        done[pl.live_idx] = true;
      }
    }
    std::vector<Live> survivors;
    for (std::size_t k = 0; k < live.size(); ++k) {
      if (!done[k]) survivors.push_back(live[k]);
    }
    live = std::move(survivors);
    t = seg.end;
  }

  return ScheduleResult::accept(std::move(schedule));
}

// ---------------------------------------------------------------------------
// Fixed-mapping baseline
// ---------------------------------------------------------------------------

ScheduleResult fixed_best(const std::vector<Job>& jobs, const Platform& platform, double t_now) {
  if (jobs.empty()) {
    Schedule empty;
    empty.platform = platform;
    return ScheduleResult::accept(std::move(empty));
  }

  const std::size_t m = platform.num_types();
  const std::size_t n = jobs.size();

  // Per job, the points that fit the platform and meet the deadline when run
  // from t_now to completion without reconfiguration.
  std::vector<std::vector<int>> options(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < jobs[j].app->points.size(); ++p) {
      const auto& point = jobs[j].app->points[p];
      if (!fits_platform(point, platform)) continue;
      if (t_now + point.exec_time * jobs[j].remaining_ratio > jobs[j].deadline + kEps) continue;
      options[j].push_back(static_cast<int>(p));
    }
    if (options[j].empty()) return ScheduleResult::reject();
  }

  std::vector<int> choice(n, -1), best_choice;
  std::vector<long> used(m, 0);
  double best_energy = kInf;

  auto search = [&](auto&& self, std::size_t j, double energy) -> void {
    if (energy >= best_energy) return;
    if (j == n) {
      best_energy = energy;
      best_choice = choice;
      return;
    }
    for (int p : options[j]) {
      const auto& point = jobs[j].app->points[static_cast<std::size_t>(p)];
      bool fits = true;
      for (std::size_t r = 0; r < m; ++r) {
        if (used[r] + point.resources[r] > platform.resource_counts[r]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t r = 0; r < m; ++r) used[r] += point.resources[r];
      choice[j] = p;
      self(self, j + 1, energy + point.energy * jobs[j].remaining_ratio);
      for (std::size_t r = 0; r < m; ++r) used[r] -= point.resources[r];
    }
    choice[j] = -1;
  };
  search(search, 0, 0.0);

  if (best_choice.empty()) return ScheduleResult::reject();

  // All jobs run concurrently from t_now; completions cut the segments.
  std::vector<double> completions;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& point = jobs[j].app->points[static_cast<std::size_t>(best_choice[j])];
    completions.push_back(t_now + point.exec_time * jobs[j].remaining_ratio);
  }
  std::vector<double> cuts(completions);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) <= kEps; }),
             cuts.end());

  Schedule schedule;
  schedule.platform = platform;
  double start = t_now;
  for (double cut : cuts) {
    MappingSegment seg;
    seg.start = start;
    seg.end = cut;
    for (std::size_t j = 0; j < n; ++j) {
      if (completions[j] >= cut - kEps) seg.assignments.push_back({jobs[j], best_choice[j]});
    }
    schedule.segments.push_back(std::move(seg));
    start = cut;
  }

  return ScheduleResult::accept(std::move(schedule));
}

} // namespace segsched
