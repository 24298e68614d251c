#ifndef SEGSCHED_MDF_SCHEDULER_HPP
#define SEGSCHED_MDF_SCHEDULER_HPP

#include <vector>

#include "segsched/edf_packer.hpp"
#include "segsched/model.hpp"
#include "segsched/result.hpp"

namespace segsched {

/// Knapsack containers: core-seconds available per resource type within the
/// analysis horizon (largest deadline minus the activation time).
struct Containers {
  std::vector<double> capacity;

  static Containers initial(const std::vector<Job>& jobs, const Platform& platform, double t_now);
};

/// The job picked by the MDF policy together with its feasible points, sorted
/// by non-decreasing remaining energy. An empty `points` means the job has no
/// feasible configuration left and the request set must be rejected.
struct CandidateList {
  int job_id = -1;
  std::vector<int> points;
};

/// Selects the next unmapped job: filters each job's points by deadline and
/// container fit, then picks the job whose gap between best and second-best
/// remaining energy is largest (a single feasible point counts as an infinite
/// gap). A job with no feasible point is returned immediately.
CandidateList next_job_mdf(const std::vector<Job>& jobs, const JobConfigMap& jc,
                           const Containers& containers, double t_now);

/// The MMKP-MDF heuristic: repeatedly selects a job with next_job_mdf, tries
/// its candidates in non-decreasing remaining energy through schedule_jobs,
/// commits the first packable one and charges the containers. Rejects as soon
/// as any job runs out of candidates.
ScheduleResult mmkp_mdf(const std::vector<Job>& jobs, const Platform& platform, double t_now);

} // namespace segsched

#endif // SEGSCHED_MDF_SCHEDULER_HPP
