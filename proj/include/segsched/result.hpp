#ifndef SEGSCHED_RESULT_HPP
#define SEGSCHED_RESULT_HPP

#include <optional>
#include <string>

#include "segsched/model.hpp"

namespace segsched {

enum class ScheduleStatus {
  scheduled,       // a feasible schedule was found
  rejected,        // no feasible schedule exists for this request set
  budget_exceeded, // the search gave up before proving either outcome
};

/// Outcome of one scheduler invocation. `schedule` is set iff scheduled.
struct ScheduleResult {
  ScheduleStatus status = ScheduleStatus::rejected;
  std::optional<Schedule> schedule;

  bool feasible() const { return status == ScheduleStatus::scheduled; }

  static ScheduleResult accept(Schedule s) {
    return {ScheduleStatus::scheduled, std::move(s)};
  }
  static ScheduleResult reject() { return {ScheduleStatus::rejected, std::nullopt}; }
  static ScheduleResult out_of_budget() {
    return {ScheduleStatus::budget_exceeded, std::nullopt};
  }
};

std::string to_string(ScheduleStatus status);

} // namespace segsched

#endif // SEGSCHED_RESULT_HPP
