#include "segsched/algorithms.hpp"

#include <stdexcept>

#include "segsched/mdf_scheduler.hpp"

namespace segsched {

std::string to_string(ScheduleStatus status) {
  switch (status) {
    case ScheduleStatus::scheduled: return "scheduled";
    case ScheduleStatus::rejected: return "rejected";
    case ScheduleStatus::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

Algo algo_from_name(const std::string& name) {
  if (name == "mdf") return Algo::mdf;
  if (name == "lr") return Algo::lr;
  if (name == "exmem") return Algo::exmem;
  if (name == "fixed") return Algo::fixed;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected mdf, lr, exmem or fixed)");
}

std::string to_string(Algo algo) {
  switch (algo) {
    case Algo::mdf: return "mdf";
    case Algo::lr: return "lr";
    case Algo::exmem: return "exmem";
    case Algo::fixed: return "fixed";
  }
  return "?";
}

ScheduleResult run_scheduler(Algo algo, const std::vector<Job>& jobs, const Platform& platform,
                             double t_now, const AlgoOptions& options) {
  switch (algo) {
    case Algo::mdf: return mmkp_mdf(jobs, platform, t_now);
    case Algo::lr: return mmkp_lr(jobs, platform, t_now);
    case Algo::exmem: return ex_mem(jobs, platform, t_now, options.exmem);
    case Algo::fixed: return fixed_best(jobs, platform, t_now);
  }
  throw std::logic_error("unreachable");
}

NamedScheduler make_scheduler(Algo algo, const AlgoOptions& options) {
  return {to_string(algo), [algo, options](const std::vector<Job>& jobs, const Platform& platform,
                                           double t_now) {
            return run_scheduler(algo, jobs, platform, t_now, options);
          }};
}

} // namespace segsched
