#ifndef SEGSCHED_WORKLOAD_HPP
#define SEGSCHED_WORKLOAD_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "segsched/algorithms.hpp"
#include "segsched/model.hpp"

namespace segsched {

enum class DeadlineLevel { weak, tight };

std::string to_string(DeadlineLevel level);
DeadlineLevel deadline_level_from_name(const std::string& name);

/// One admissible request set: 1-4 jobs snapshotted at their activation time
/// (the latest arrival among them).
struct TestCase {
  std::string id;
  std::vector<Job> jobs;
  DeadlineLevel level = DeadlineLevel::weak;
  std::uint64_t seed = 0;

  double activation_time() const;
};

/// Arrival-driven request trace: events are (time, application, relative
/// deadline), non-decreasing in time.
struct TraceEvent {
  double time = 0.0;
  std::string app;
  double relative_deadline = 0.0;
};

struct RequestTrace {
  std::vector<TraceEvent> events;
};

/// Knobs of the test-case generator. Probabilities must sum to 1.
struct SuiteMix {
  std::array<double, 4> job_count_probs{0.0298, 0.3550, 0.3550, 0.2602};
  double tight_prob = 0.5495;
  double single_app_prob = 0.319;
  double zero_progress_prob = 0.226;
  double weak_factor_lo = 2.0, weak_factor_hi = 6.0;
  double tight_factor_lo = 0.6, tight_factor_hi = 2.0;

  void check() const; // throws std::invalid_argument on bad parameters
};

/// Deterministic test-case generation: job count and deadline level drawn per
/// case, progress ratios in [0.1, 1] (the first job always fresh), deadlines
/// from a randomly sampled point's remaining time scaled by a level factor.
std::vector<TestCase> generate_suite(const std::vector<ProfilePtr>& profiles, int count,
                                     const SuiteMix& mix, std::uint64_t seed);

/// Sampling pieces of the generator, exposed so their marginals can be tested
/// directly.
double draw_progress(std::mt19937_64& rng);

struct DeadlineSample {
  int point_index = 0;
  double factor = 0.0;
  double offset = 0.0; // deadline minus current time
};
DeadlineSample draw_deadline(std::mt19937_64& rng, const ApplicationProfile& app, double rho,
                             DeadlineLevel level, const SuiteMix& mix);

/// Replay of a request trace through a scheduler: at each arrival the running
/// jobs' progress is advanced along the adopted schedule, the scheduler is
/// invoked on the unfinished jobs plus the newcomer, and the new schedule is
/// adopted on admit (kept on reject).
struct ReplayEvent {
  double time = 0.0;
  int job_id = -1;
  bool admitted = false;
  double schedule_energy = 0.0; // energy of the schedule in force after the event
};

struct JobCompletion {
  int job_id = -1;
  double time = 0.0;
};

struct ReplayLog {
  std::vector<ReplayEvent> events;
  std::vector<JobCompletion> completions;
  double total_energy = 0.0; // energy actually consumed across the whole trace
};

ReplayLog replay(const RequestTrace& trace, const NamedScheduler& scheduler,
                 const std::vector<ProfilePtr>& profiles, const Platform& platform);

} // namespace segsched

#endif // SEGSCHED_WORKLOAD_HPP
