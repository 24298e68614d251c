#ifndef SEGSCHED_IO_HPP
#define SEGSCHED_IO_HPP

#include <string>
#include <vector>

#include "segsched/evalharness.hpp"
#include "segsched/model.hpp"
#include "segsched/workload.hpp"

namespace segsched {

/// A platform together with the application profiles characterized for it.
struct ProfileSet {
  Platform platform;
  std::vector<ProfilePtr> apps;

  ProfilePtr find(const std::string& name) const; // throws on unknown names
};

// All loaders validate what they read (profile invariants included) and
// throw std::runtime_error naming the offending file on any defect.
ProfileSet load_profile_set(const std::string& path);

TestCase load_case(const std::string& path, const ProfileSet& profiles);
void save_case(const TestCase& tc, const std::string& path);

std::vector<TestCase> load_suite(const std::string& path, const ProfileSet& profiles);
void save_suite(const std::vector<TestCase>& cases, std::uint64_t seed, const std::string& path);

RequestTrace load_trace(const std::string& path);
void save_trace(const RequestTrace& trace, const std::string& path);

/// Schedules are stored as segments of (job id, point index) pairs; loading
/// resolves them against the jobs of a test case.
Schedule load_schedule(const std::string& path, const std::vector<Job>& jobs,
                       const Platform& platform);
void save_schedule(const Schedule& schedule, const std::string& path);

void save_records_csv(const std::vector<EvalRecord>& records, const std::string& path);

/// JSON summary: the geomean grid per algorithm, S-curve arrays, and timing
/// summaries, everything keyed by algorithm name.
void save_summary_json(const std::vector<EvalRecord>& records, const std::string& baseline,
                       const std::string& path);

} // namespace segsched

#endif // SEGSCHED_IO_HPP
