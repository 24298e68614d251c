#include "segsched/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace segsched {

namespace {

void check_structure(const Schedule& schedule) {
  const auto& segs = schedule.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (!(segs[i].start < segs[i].end)) {
      throw std::invalid_argument("segment " + std::to_string(i) + " has non-positive length");
    }
    if (i > 0 && std::abs(segs[i - 1].end - segs[i].start) > kEps) {
      throw std::invalid_argument("segments " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " are not contiguous");
    }
  }
}

} // namespace

double schedule_energy(const Schedule& schedule) {
  check_structure(schedule);
  double total = 0.0;
  for (const auto& seg : schedule.segments) {
    const double len = seg.length();
    for (const auto& nu : seg.assignments) {
      const auto& p = nu.point();
      total += p.energy * len / p.exec_time;
    }
  }
  return total;
}

double job_remaining_time(const Job& job, const OperatingPoint& point) {
  return point.exec_time * job.remaining_ratio;
}

double job_remaining_energy(const Job& job, const OperatingPoint& point) {
  return point.energy * job.remaining_ratio;
}

bool fits_platform(const OperatingPoint& point, const Platform& platform) {
  if (point.resources.size() != platform.num_types()) return false;
  for (std::size_t r = 0; r < point.resources.size(); ++r) {
    if (point.resources[r] > platform.resource_counts[r]) return false;
  }
  return true;
}

ValidationReport validate(const Schedule& schedule, const std::vector<Job>& jobs,
                          const Platform& platform, double t_now) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, int seg, int job, std::string msg) {
    report.violations.push_back({kind, seg, job, std::move(msg)});
  };

  const auto& segs = schedule.segments;
  const std::size_t m = platform.num_types();

  // Structural checks: interval ordering, contiguity, activation time.
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (!(segs[i].start < segs[i].end)) {
      add(ViolationKind::structural, static_cast<int>(i), -1,
          "segment has non-positive length");
    }
    if (i > 0 && std::abs(segs[i - 1].end - segs[i].start) > kEps) {
      add(ViolationKind::structural, static_cast<int>(i), -1,
          "segment does not start where the previous one ends");
    }
  }
  if (!segs.empty() && std::abs(segs.front().start - t_now) > kEps) {
    add(ViolationKind::structural, 0, -1, "first segment does not start at the activation time");
  }

  std::set<int> known_ids;
  for (const auto& job : jobs) known_ids.insert(job.id);

  // Per-segment checks: (2b) resource sums and (2c) job uniqueness.
  for (std::size_t i = 0; i < segs.size(); ++i) {
    std::vector<long> used(m, 0);
    std::set<int> seen;
    for (const auto& nu : segs[i].assignments) {
      if (!seen.insert(nu.job.id).second) {
        add(ViolationKind::duplicate_job, static_cast<int>(i), nu.job.id,
            "job mapped more than once in a segment");
      }
      if (!known_ids.count(nu.job.id)) {
        add(ViolationKind::unknown_job, static_cast<int>(i), nu.job.id,
            "mapping references a job outside the checked set");
      }
      const auto& res = nu.point().resources;
      for (std::size_t r = 0; r < m && r < res.size(); ++r) used[r] += res[r];
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (used[r] > platform.resource_counts[r]) {
        add(ViolationKind::resource_overflow, static_cast<int>(i), -1,
            "resource type " + (r < platform.type_names.size() ? platform.type_names[r]
                                                               : std::to_string(r)) +
                " oversubscribed: " + std::to_string(used[r]) + " > " +
                std::to_string(platform.resource_counts[r]));
      }
    }
  }

  // Per-job checks: (2d) progress coverage and (2e) deadlines.
  for (const auto& job : jobs) {
    double covered = 0.0;
    double last_end = -1.0;
    for (const auto& seg : segs) {
      for (const auto& nu : seg.assignments) {
        if (nu.job.id != job.id) continue;
        covered += seg.length() / nu.point().exec_time;
        last_end = std::max(last_end, seg.end);
      }
    }
    if (std::abs(covered - job.remaining_ratio) > kEps) {
      std::ostringstream msg;
      msg << "job covers ratio " << covered << " but needs " << job.remaining_ratio;
      add(ViolationKind::progress_mismatch, -1, job.id, msg.str());
    }
    if (last_end > job.deadline + kEps) {
      std::ostringstream msg;
      msg << "job finishes at " << last_end << " after deadline " << job.deadline;
      add(ViolationKind::deadline_miss, -1, job.id, msg.str());
    }
  }

  return report;
}

std::vector<OperatingPoint> pareto_filter(const std::vector<OperatingPoint>& points) {
  if (points.empty()) throw std::invalid_argument("pareto_filter: empty point list");

  auto dominates = [](const OperatingPoint& a, const OperatingPoint& b) {
    // a dominates b: <= everywhere, < somewhere.
    if (a.resources.size() != b.resources.size()) return false;
    bool strict = false;
    for (std::size_t r = 0; r < a.resources.size(); ++r) {
      if (a.resources[r] > b.resources[r]) return false;
      if (a.resources[r] < b.resources[r]) strict = true;
    }
    if (a.exec_time > b.exec_time) return false;
    if (a.exec_time < b.exec_time) strict = true;
    if (a.energy > b.energy) return false;
    if (a.energy < b.energy) strict = true;
    return strict;
  };

  std::vector<OperatingPoint> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j && dominates(points[j], points[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(points[i]);
  }
  return kept;
}

std::string format_point(const OperatingPoint& point, const Platform& platform) {
  std::string out;
  for (std::size_t r = 0; r < point.resources.size(); ++r) {
    if (point.resources[r] == 0) continue;
    out += std::to_string(point.resources[r]);
    out += r < platform.type_names.size() ? platform.type_names[r] : ("r" + std::to_string(r));
  }
  return out.empty() ? "idle" : out;
}

} // namespace segsched
