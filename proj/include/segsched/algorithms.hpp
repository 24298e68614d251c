#ifndef SEGSCHED_ALGORITHMS_HPP
#define SEGSCHED_ALGORITHMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "segsched/baselines.hpp"
#include "segsched/result.hpp"

namespace segsched {

enum class Algo { mdf, lr, exmem, fixed };

Algo algo_from_name(const std::string& name); // throws on unknown names
std::string to_string(Algo algo);

struct AlgoOptions {
  ExMemOptions exmem;
};

ScheduleResult run_scheduler(Algo algo, const std::vector<Job>& jobs, const Platform& platform,
                             double t_now, const AlgoOptions& options = {});

/// A named scheduling function, as consumed by the evaluation harness.
struct NamedScheduler {
  std::string name;
  std::function<ScheduleResult(const std::vector<Job>&, const Platform&, double)> run;
};

NamedScheduler make_scheduler(Algo algo, const AlgoOptions& options = {});

} // namespace segsched

#endif // SEGSCHED_ALGORITHMS_HPP
