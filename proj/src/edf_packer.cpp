#include "segsched/edf_packer.hpp"

#include <algorithm>
#include <stdexcept>

namespace segsched {

std::pair<MappingSegment, MappingSegment> split_segment(const MappingSegment& segment, double at) {
  if (!(segment.start < at && at < segment.end)) {
    throw std::invalid_argument("split_segment: split point outside the open interval");
  }
  MappingSegment left = segment;
  MappingSegment right = segment;
  left.end = at;
  right.start = at;
  return {std::move(left), std::move(right)};
}

std::optional<Schedule> schedule_jobs(const std::vector<Job>& jobs, const JobConfigMap& jc,
                                      const Platform& platform, double t_now) {
  // Only jobs with a set configuration are packed.
  std::vector<Job> pending;
  for (const auto& job : jobs) {
    if (!jc.is_set(job.id)) continue;
    const int j = jc.entries.at(job.id);
    if (!job.app || j < 0 || j >= static_cast<int>(job.app->points.size())) {
      throw std::invalid_argument("schedule_jobs: invalid point index for job " +
                                  std::to_string(job.id));
    }
    pending.push_back(job);
  }

  // EDF order; ties by arrival, then id, for determinism.
  std::sort(pending.begin(), pending.end(), [](const Job& a, const Job& b) {
    if (a.deadline != b.deadline) return a.deadline < b.deadline;
    if (a.arrival != b.arrival) return a.arrival < b.arrival;
    return a.id < b.id;
  });

  Schedule schedule;
  schedule.platform = platform;
  auto& segs = schedule.segments;
  const std::size_t m = platform.num_types();

  for (const auto& job : pending) {
    const int point_idx = jc.entries.at(job.id);
    const OperatingPoint& point = job.app->points[static_cast<std::size_t>(point_idx)];
    double rho = job.remaining_ratio;
    double finish = t_now;

    for (std::size_t i = 0; i < segs.size() && rho * point.exec_time > kEps; ++i) {
      MappingSegment& seg = segs[i];

      std::vector<long> used(m, 0);
      for (const auto& nu : seg.assignments) {
        const auto& res = nu.point().resources;
        for (std::size_t r = 0; r < m; ++r) used[r] += res[r];
      }
      bool fits = true;
      for (std::size_t r = 0; r < m; ++r) {
        if (used[r] + point.resources[r] > platform.resource_counts[r]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;

      const double work = point.exec_time * rho;
      if (work >= seg.length() - kEps) {
        // Runs through the whole segment (an exact fit counts as whole).
        seg.assignments.push_back({job, point_idx});
        rho -= seg.length() / point.exec_time;
        if (rho * point.exec_time <= kEps) {
          rho = 0.0;
          finish = seg.end;
          break;
        }
      } else {
        auto [left, right] = split_segment(seg, seg.start + work);
        left.assignments.push_back({job, point_idx});
        finish = left.end;
        rho = 0.0;
        segs[i] = std::move(left);
        segs.insert(segs.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(right));
        break;
      }
    }

    if (rho > 0.0) {
      // Leftover work opens a new trailing segment, kept contiguous with the
      // last existing one.
      const double start = segs.empty() ? t_now : segs.back().end;
      const double work = point.exec_time * rho;
      MappingSegment seg;
      seg.start = start;
      seg.end = start + work;
      seg.assignments.push_back({job, point_idx});
      finish = seg.end;
      segs.push_back(std::move(seg));
    }

    if (finish > job.deadline + kEps) return std::nullopt;
  }

  return schedule;
}

} // namespace segsched
