#ifndef SEGSCHED_MODEL_HPP
#define SEGSCHED_MODEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace segsched {

/// Absolute tolerance for all time/energy/ratio comparisons (seconds, joules,
/// dimensionless ratios alike).
inline constexpr double kEps = 1e-9;

/// A heterogeneous platform: one core count per resource type.
struct Platform {
  std::vector<int> resource_counts;
  std::vector<std::string> type_names;

  std::size_t num_types() const { return resource_counts.size(); }
};

/// One way to run an application: cores per type, plus time and energy for a
/// full 0% -> 100% run.
struct OperatingPoint {
  std::vector<int> resources;
  double exec_time = 0.0;
  double energy = 0.0;
};

/// An application with its Pareto-filtered list of operating points.
struct ApplicationProfile {
  std::string name;
  std::vector<OperatingPoint> points;
};

using ProfilePtr = std::shared_ptr<const ApplicationProfile>;

/// An admitted request. `remaining_ratio` is the fraction of work still to do;
/// remaining time and energy on a point scale linearly with it.
struct Job {
  int id = 0;
  double arrival = 0.0;
  double deadline = 0.0;
  ProfilePtr app;
  double remaining_ratio = 1.0;
};

/// One job running one of its operating points within a segment.
struct JobMapping {
  Job job;
  int point_index = 0;

  const OperatingPoint& point() const { return job.app->points.at(static_cast<std::size_t>(point_index)); }
};

/// A half-open time interval [start, end) with a fixed set of job mappings.
struct MappingSegment {
  double start = 0.0;
  double end = 0.0;
  std::vector<JobMapping> assignments;

  double length() const { return end - start; }
};

/// A contiguous list of mapping segments on a platform.
struct Schedule {
  Platform platform;
  std::vector<MappingSegment> segments;

  bool empty() const { return segments.empty(); }
};

enum class ViolationKind {
  structural,        // ordering, contiguity, or activation-time defects
  resource_overflow, // per-segment resource sums exceed the platform
  duplicate_job,     // more than one mapping for the same job in a segment
  progress_mismatch, // packed work does not equal the job's remaining ratio
  deadline_miss,     // a job's last segment ends after its deadline
  unknown_job,       // a mapping references a job not in the checked set
};

struct Violation {
  ViolationKind kind;
  int segment_index = -1; // -1 when the violation is not tied to a segment
  int job_id = -1;        // -1 when the violation is not tied to a job
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Total energy of a schedule: sum over segments and assignments of
/// energy * segment_length / exec_time. Throws std::invalid_argument on a
/// structurally malformed schedule (empty, overlapping or reversed segments).
double schedule_energy(const Schedule& schedule);

/// Checks a schedule against a job set: resource sums per segment, one mapping
/// per job per segment, exact progress coverage per job, and deadlines. Also
/// reports structural defects (non-contiguous segments, first segment not
/// starting at t_now). Collects every violation instead of stopping early.
ValidationReport validate(const Schedule& schedule, const std::vector<Job>& jobs,
                          const Platform& platform, double t_now);

/// Time to finish `job` if it runs `point` to completion: exec_time * ratio.
double job_remaining_time(const Job& job, const OperatingPoint& point);

/// Remaining energy of `job` on `point`: energy * ratio.
double job_remaining_energy(const Job& job, const OperatingPoint& point);

/// Returns the non-dominated subset of `points`, preserving input order.
/// A point is dominated if another is <= in every resource entry, exec_time
/// and energy, with at least one strict inequality. Throws on empty input.
std::vector<OperatingPoint> pareto_filter(const std::vector<OperatingPoint>& points);

/// True if every point of `points` fits the platform on its own.
bool fits_platform(const OperatingPoint& point, const Platform& platform);

std::string format_point(const OperatingPoint& point, const Platform& platform);

} // namespace segsched

#endif // SEGSCHED_MODEL_HPP
