#include "segsched/mdf_scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace segsched {

Containers Containers::initial(const std::vector<Job>& jobs, const Platform& platform,
                               double t_now) {
  double horizon = 0.0;
  for (const auto& job : jobs) horizon = std::max(horizon, job.deadline - t_now);
  Containers c;
  c.capacity.resize(platform.num_types());
  for (std::size_t r = 0; r < platform.num_types(); ++r) {
    c.capacity[r] = platform.resource_counts[r] * horizon;
  }
  return c;
}

namespace {

// Feasible point filter: meets the deadline if started now, and its
// core-second demand fits the containers.
std::vector<int> feasible_points(const Job& job, const Containers& containers, double t_now) {
  std::vector<int> out;
  const double slack = job.deadline - t_now;
  for (std::size_t p = 0; p < job.app->points.size(); ++p) {
    const auto& point = job.app->points[p];
    const double work = job_remaining_time(job, point);
    if (work > slack + kEps) continue;
    bool fits = true;
    for (std::size_t r = 0; r < containers.capacity.size(); ++r) {
      if (point.resources[r] * work > containers.capacity[r] + kEps) {
        fits = false;
        break;
      }
    }
    if (fits) out.push_back(static_cast<int>(p));
  }
  return out;
}

void sort_by_remaining_energy(const Job& job, std::vector<int>& points) {
  std::stable_sort(points.begin(), points.end(), [&](int a, int b) {
    return job.app->points[static_cast<std::size_t>(a)].energy <
           job.app->points[static_cast<std::size_t>(b)].energy;
  });
}

} // namespace

CandidateList next_job_mdf(const std::vector<Job>& jobs, const JobConfigMap& jc,
                           const Containers& containers, double t_now) {
  CandidateList best;
  double best_gap = -1.0;
  double best_deadline = 0.0;
  int best_id = 0;

  for (const auto& job : jobs) {
    if (jc.is_set(job.id)) continue;

    std::vector<int> points = feasible_points(job, containers, t_now);
    if (points.empty()) {
      // Forces rejection in the caller; no point scoring the rest.
      return {job.id, {}};
    }
    sort_by_remaining_energy(job, points);

    double gap;
    if (points.size() == 1) {
      gap = std::numeric_limits<double>::infinity();
    } else {
      const auto& pts = job.app->points;
      gap = job.remaining_ratio * (pts[static_cast<std::size_t>(points[1])].energy -
                                   pts[static_cast<std::size_t>(points[0])].energy);
    }

    const bool take = gap > best_gap ||
                      (gap == best_gap && (job.deadline < best_deadline ||
                                           (job.deadline == best_deadline && job.id < best_id)));
    if (take) {
      best = {job.id, std::move(points)};
      best_gap = gap;
      best_deadline = job.deadline;
      best_id = job.id;
    }
  }

  return best;
}

ScheduleResult mmkp_mdf(const std::vector<Job>& jobs, const Platform& platform, double t_now) {
  Containers containers = Containers::initial(jobs, platform, t_now);
  JobConfigMap jc;
  Schedule schedule;
  schedule.platform = platform;

  std::size_t unmapped = jobs.size();
  while (unmapped > 0) {
    CandidateList cand = next_job_mdf(jobs, jc, containers, t_now);
    const Job* job = nullptr;
    for (const auto& j : jobs) {
      if (j.id == cand.job_id) job = &j;
    }
    assert(job != nullptr);

    while (!jc.is_set(cand.job_id)) {
      if (cand.points.empty()) return ScheduleResult::reject();

      const int point_idx = cand.points.front();
      JobConfigMap attempt = jc;
      attempt.set(cand.job_id, point_idx);
      auto packed = schedule_jobs(jobs, attempt, platform, t_now);
      if (packed) {
        jc = std::move(attempt);
        schedule = std::move(*packed);
        const auto& point = job->app->points[static_cast<std::size_t>(point_idx)];
        const double work = job_remaining_time(*job, point);
        for (std::size_t r = 0; r < containers.capacity.size(); ++r) {
          containers.capacity[r] -= point.resources[r] * work;
          if (containers.capacity[r] < 0.0) containers.capacity[r] = 0.0; // filter allowed eps
        }
        --unmapped;
      } else {
        cand.points.erase(cand.points.begin());
      }
    }
  }

  return ScheduleResult::accept(std::move(schedule));
}

} // namespace segsched
