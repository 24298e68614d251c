#include "segsched/workload.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace segsched {

std::string to_string(DeadlineLevel level) {
  return level == DeadlineLevel::weak ? "weak" : "tight";
}

DeadlineLevel deadline_level_from_name(const std::string& name) {
  if (name == "weak") return DeadlineLevel::weak;
  if (name == "tight") return DeadlineLevel::tight;
  throw std::invalid_argument("unknown deadline level '" + name + "'");
}

double TestCase::activation_time() const {
  double t = 0.0;
  for (const auto& job : jobs) t = std::max(t, job.arrival);
  return t;
}

void SuiteMix::check() const {
  double sum = 0.0;
  for (double p : job_count_probs) {
    if (p < 0.0) throw std::invalid_argument("job count probabilities must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw std::invalid_argument("job count probabilities must sum to 1");
  }
  if (tight_prob < 0.0 || tight_prob > 1.0 || single_app_prob < 0.0 || single_app_prob > 1.0 ||
      zero_progress_prob < 0.0 || zero_progress_prob > 1.0) {
    throw std::invalid_argument("mix probabilities must lie in [0, 1]");
  }
  if (weak_factor_lo <= 0.0 || weak_factor_lo > weak_factor_hi || tight_factor_lo <= 0.0 ||
      tight_factor_hi < tight_factor_lo) {
    throw std::invalid_argument("deadline factor ranges are invalid");
  }
}

namespace {

// The mt19937_64 engine output is fully specified, so building uniforms by
// hand keeps generated suites identical across standard libraries.
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  auto idx = static_cast<std::size_t>(u01(rng) * static_cast<double>(n));
  return idx >= n ? n - 1 : idx;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

} // namespace

double draw_progress(std::mt19937_64& rng) { return uniform_in(rng, 0.0, 0.9); }

DeadlineSample draw_deadline(std::mt19937_64& rng, const ApplicationProfile& app, double rho,
                             DeadlineLevel level, const SuiteMix& mix) {
  DeadlineSample sample;
  sample.point_index = static_cast<int>(uniform_index(rng, app.points.size()));
  sample.factor = level == DeadlineLevel::weak
                      ? uniform_in(rng, mix.weak_factor_lo, mix.weak_factor_hi)
                      : uniform_in(rng, mix.tight_factor_lo, mix.tight_factor_hi);
  const auto& point = app.points[static_cast<std::size_t>(sample.point_index)];
  sample.offset = sample.factor * point.exec_time * rho;
  return sample;
}

std::vector<TestCase> generate_suite(const std::vector<ProfilePtr>& profiles, int count,
                                     const SuiteMix& mix, std::uint64_t seed) {
  mix.check();
  if (count < 1) throw std::invalid_argument("generate_suite: count must be >= 1");
  if (profiles.empty()) throw std::invalid_argument("generate_suite: no application profiles");

  std::vector<TestCase> cases;
  cases.reserve(static_cast<std::size_t>(count));

  for (int i = 0; i < count; ++i) {
    const std::uint64_t case_seed = splitmix64(seed + static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(case_seed);

    TestCase tc;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "case_%05d", i);
    tc.id = buf;
    tc.seed = case_seed;

    const double u_count = u01(rng);
    std::size_t job_count = mix.job_count_probs.size();
    double cum = 0.0;
    for (std::size_t k = 0; k < mix.job_count_probs.size(); ++k) {
      cum += mix.job_count_probs[k];
      if (u_count <= cum) {
        job_count = k + 1;
        break;
      }
    }
    if (job_count > mix.job_count_probs.size()) job_count = mix.job_count_probs.size();

    tc.level = u01(rng) < mix.tight_prob ? DeadlineLevel::tight : DeadlineLevel::weak;
    const bool single_app = u01(rng) < mix.single_app_prob;
    const bool zero_progress = u01(rng) < mix.zero_progress_prob;
    const ProfilePtr fixed_app = profiles[uniform_index(rng, profiles.size())];

    for (std::size_t j = 0; j < job_count; ++j) {
      Job job;
      job.id = static_cast<int>(j);
      job.arrival = 0.0;
      job.app = single_app ? fixed_app : profiles[uniform_index(rng, profiles.size())];
      job.remaining_ratio = (j == 0 || zero_progress) ? 1.0 : 1.0 - draw_progress(rng);
      const DeadlineSample d = draw_deadline(rng, *job.app, job.remaining_ratio, tc.level, mix);
      job.deadline = job.arrival + d.offset;
      tc.jobs.push_back(std::move(job));
    }
    cases.push_back(std::move(tc));
  }

  return cases;
}

// ---------------------------------------------------------------------------
// Trace replay
// ---------------------------------------------------------------------------

namespace {

ProfilePtr find_profile(const std::vector<ProfilePtr>& profiles, const std::string& name) {
  for (const auto& p : profiles) {
    if (p->name == name) return p;
  }
  throw std::invalid_argument("trace references unknown application '" + name + "'");
}

} // namespace

ReplayLog replay(const RequestTrace& trace, const NamedScheduler& scheduler,
                 const std::vector<ProfilePtr>& profiles, const Platform& platform) {
  for (std::size_t i = 1; i < trace.events.size(); ++i) {
    if (trace.events[i].time < trace.events[i - 1].time - kEps) {
      throw std::invalid_argument("trace events must be ordered by arrival time");
    }
  }

  ReplayLog log;
  std::vector<Job> active;
  Schedule current;
  current.platform = platform;
  double cursor = 0.0;
  int next_id = 0;

  // Consume the adopted schedule up to `to`, advancing progress ratios and
  // accounting the executed energy.
  auto advance = [&](double to) {
    for (const auto& seg : current.segments) {
      const double lo = std::max(seg.start, cursor);
      const double hi = std::min(seg.end, to);
      if (hi - lo <= kEps) continue;
      const double len = hi - lo;
      for (const auto& nu : seg.assignments) {
        auto it = std::find_if(active.begin(), active.end(),
                               [&](const Job& j) { return j.id == nu.job.id; });
        if (it == active.end()) continue; // already completed
        const auto& point = nu.point();
        it->remaining_ratio -= len / point.exec_time;
        log.total_energy += point.energy * len / point.exec_time;
        if (it->remaining_ratio * point.exec_time <= kEps) {
          log.completions.push_back({it->id, hi});
          active.erase(it);
        }
      }
    }
    cursor = std::max(cursor, to);
  };

  for (const auto& event : trace.events) {
    advance(event.time);

    Job job;
    job.id = next_id++;
    job.arrival = event.time;
    job.deadline = event.time + event.relative_deadline;
    job.app = find_profile(profiles, event.app);
    job.remaining_ratio = 1.0;

    std::vector<Job> request_set = active;
    request_set.push_back(job);

    const ScheduleResult result = scheduler.run(request_set, platform, event.time);
    ReplayEvent entry;
    entry.time = event.time;
    entry.job_id = job.id;
    entry.admitted = result.feasible();
    if (result.feasible()) {
      current = *result.schedule;
      active = std::move(request_set);
      cursor = event.time;
    }
    entry.schedule_energy = current.segments.empty() ? 0.0 : schedule_energy(current);
    log.events.push_back(entry);
  }

  // Run the final schedule to completion.
  double horizon = cursor;
  for (const auto& seg : current.segments) horizon = std::max(horizon, seg.end);
  advance(horizon);

  return log;
}

} // namespace segsched
