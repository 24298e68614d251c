#ifndef SEGSCHED_EDF_PACKER_HPP
#define SEGSCHED_EDF_PACKER_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "segsched/model.hpp"

namespace segsched {

/// Per-job configuration choice. A job absent from `entries` is unset and is
/// skipped by the packer.
struct JobConfigMap {
  std::map<int, int> entries;

  bool is_set(int job_id) const { return entries.count(job_id) != 0; }
  void set(int job_id, int point_index) { entries[job_id] = point_index; }
  void unset(int job_id) { entries.erase(job_id); }
};

/// Packs the configured jobs into contiguous mapping segments in EDF order.
///
/// Each job is placed into existing segments in time order wherever its point
/// fits the per-segment resource budget, occupying whole segments while its
/// remaining work lasts and splitting the segment where it finishes; leftover
/// work opens a new trailing segment. Returns std::nullopt as soon as a job's
/// finish time exceeds its deadline (no feasible schedule for this jc).
std::optional<Schedule> schedule_jobs(const std::vector<Job>& jobs, const JobConfigMap& jc,
                                      const Platform& platform, double t_now);

/// Splits a segment at an interior time point; both halves inherit all
/// assignments. Throws std::invalid_argument unless start < at < end.
std::pair<MappingSegment, MappingSegment> split_segment(const MappingSegment& segment, double at);

} // namespace segsched

#endif // SEGSCHED_EDF_PACKER_HPP
