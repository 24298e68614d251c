#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "segsched/algorithms.hpp"
#include "segsched/baselines.hpp"
#include "segsched/edf_packer.hpp"
#include "segsched/evalharness.hpp"
#include "segsched/io.hpp"
#include "segsched/mdf_scheduler.hpp"
#include "segsched/model.hpp"
#include "segsched/workload.hpp"

namespace py = pybind11;
using namespace segsched;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Segmented, adaptable multi-application scheduling for heterogeneous multi-cores";

  py::class_<Platform>(m, "Platform")
      .def(py::init([](std::vector<int> counts, std::vector<std::string> names) {
             return Platform{std::move(counts), std::move(names)};
           }),
           py::arg("resource_counts"), py::arg("type_names"))
      .def_readonly("resource_counts", &Platform::resource_counts)
      .def_readonly("type_names", &Platform::type_names);

  py::class_<OperatingPoint>(m, "OperatingPoint")
      .def(py::init([](std::vector<int> resources, double exec_time, double energy) {
             return OperatingPoint{std::move(resources), exec_time, energy};
           }),
           py::arg("resources"), py::arg("exec_time"), py::arg("energy"))
      .def_readonly("resources", &OperatingPoint::resources)
      .def_readonly("exec_time", &OperatingPoint::exec_time)
      .def_readonly("energy", &OperatingPoint::energy);

  py::class_<ApplicationProfile, std::shared_ptr<ApplicationProfile>>(m, "ApplicationProfile")
      .def(py::init([](std::string name, std::vector<OperatingPoint> points) {
             return std::make_shared<ApplicationProfile>(
                 ApplicationProfile{std::move(name), std::move(points)});
           }),
           py::arg("name"), py::arg("points"))
      .def_readonly("name", &ApplicationProfile::name)
      .def_readonly("points", &ApplicationProfile::points);

  py::class_<Job>(m, "Job")
      .def(py::init([](int id, double arrival, double deadline, ProfilePtr app, double rho) {
             return Job{id, arrival, deadline, std::move(app), rho};
           }),
           py::arg("id"), py::arg("arrival"), py::arg("deadline"), py::arg("app"),
           py::arg("remaining_ratio") = 1.0)
      .def_readonly("id", &Job::id)
      .def_readonly("arrival", &Job::arrival)
      .def_readonly("deadline", &Job::deadline)
      .def_readonly("app", &Job::app)
      .def_readonly("remaining_ratio", &Job::remaining_ratio);

  py::class_<JobMapping>(m, "JobMapping")
      .def_readonly("job", &JobMapping::job)
      .def_readonly("point_index", &JobMapping::point_index);

  py::class_<MappingSegment>(m, "MappingSegment")
      .def_readonly("start", &MappingSegment::start)
      .def_readonly("end", &MappingSegment::end)
      .def_readonly("assignments", &MappingSegment::assignments);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("platform", &Schedule::platform)
      .def_readonly("segments", &Schedule::segments)
      .def("energy", &schedule_energy);

  py::class_<Violation>(m, "Violation")
      .def_readonly("segment_index", &Violation::segment_index)
      .def_readonly("job_id", &Violation::job_id)
      .def_readonly("message", &Violation::message);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("violations", &ValidationReport::violations)
      .def("ok", &ValidationReport::ok);

  py::enum_<ScheduleStatus>(m, "ScheduleStatus")
      .value("scheduled", ScheduleStatus::scheduled)
      .value("rejected", ScheduleStatus::rejected)
      .value("budget_exceeded", ScheduleStatus::budget_exceeded);

  py::class_<ScheduleResult>(m, "ScheduleResult")
      .def_readonly("status", &ScheduleResult::status)
      .def_readonly("schedule", &ScheduleResult::schedule)
      .def("feasible", &ScheduleResult::feasible);

  py::class_<JobConfigMap>(m, "JobConfigMap")
      .def(py::init<>())
      .def("set", &JobConfigMap::set, py::arg("job_id"), py::arg("point_index"))
      .def("unset", &JobConfigMap::unset, py::arg("job_id"))
      .def("is_set", &JobConfigMap::is_set, py::arg("job_id"));

  m.def("schedule_energy", &schedule_energy, py::arg("schedule"));
  m.def("validate", &validate, py::arg("schedule"), py::arg("jobs"), py::arg("platform"),
        py::arg("t_now"));
  m.def("job_remaining_time", &job_remaining_time, py::arg("job"), py::arg("point"));
  m.def("pareto_filter", &pareto_filter, py::arg("points"));
  m.def("schedule_jobs", &schedule_jobs, py::arg("jobs"), py::arg("jc"), py::arg("platform"),
        py::arg("t_now"));
  m.def(
      "split_segment",
      [](const MappingSegment& seg, double at) { return split_segment(seg, at); },
      py::arg("segment"), py::arg("at"));
  m.def("mmkp_mdf", &mmkp_mdf, py::arg("jobs"), py::arg("platform"), py::arg("t_now"));
  m.def("mmkp_lr", &mmkp_lr, py::arg("jobs"), py::arg("platform"), py::arg("t_now"));
  m.def(
      "ex_mem",
      [](const std::vector<Job>& jobs, const Platform& platform, double t_now,
         std::uint64_t node_budget) {
        ExMemOptions options;
        if (node_budget > 0) options.node_budget = node_budget;
        return ex_mem(jobs, platform, t_now, options);
      },
      py::arg("jobs"), py::arg("platform"), py::arg("t_now"), py::arg("node_budget") = 0);
  m.def("fixed_best", &fixed_best, py::arg("jobs"), py::arg("platform"), py::arg("t_now"));

  py::enum_<DeadlineLevel>(m, "DeadlineLevel")
      .value("weak", DeadlineLevel::weak)
      .value("tight", DeadlineLevel::tight);

  py::class_<TestCase>(m, "TestCase")
      .def_readonly("id", &TestCase::id)
      .def_readonly("jobs", &TestCase::jobs)
      .def_readonly("level", &TestCase::level)
      .def_readonly("seed", &TestCase::seed)
      .def("activation_time", &TestCase::activation_time);

  py::class_<SuiteMix>(m, "SuiteMix")
      .def(py::init<>())
      .def_readwrite("tight_prob", &SuiteMix::tight_prob)
      .def_readwrite("single_app_prob", &SuiteMix::single_app_prob)
      .def_readwrite("zero_progress_prob", &SuiteMix::zero_progress_prob);

  m.def(
      "generate_suite",
      [](const std::vector<ProfilePtr>& profiles, int count, const SuiteMix& mix,
         std::uint64_t seed) { return generate_suite(profiles, count, mix, seed); },
      py::arg("profiles"), py::arg("count"), py::arg("mix"), py::arg("seed"));

  py::class_<TraceEvent>(m, "TraceEvent")
      .def(py::init([](double time, std::string app, double relative_deadline) {
             return TraceEvent{time, std::move(app), relative_deadline};
           }),
           py::arg("time"), py::arg("app"), py::arg("relative_deadline"))
      .def_readonly("time", &TraceEvent::time)
      .def_readonly("app", &TraceEvent::app)
      .def_readonly("relative_deadline", &TraceEvent::relative_deadline);

  py::class_<RequestTrace>(m, "RequestTrace")
      .def(py::init([](std::vector<TraceEvent> events) { return RequestTrace{std::move(events)}; }),
           py::arg("events"))
      .def_readonly("events", &RequestTrace::events);

  py::class_<ReplayEvent>(m, "ReplayEvent")
      .def_readonly("time", &ReplayEvent::time)
      .def_readonly("job_id", &ReplayEvent::job_id)
      .def_readonly("admitted", &ReplayEvent::admitted)
      .def_readonly("schedule_energy", &ReplayEvent::schedule_energy);

  py::class_<JobCompletion>(m, "JobCompletion")
      .def_readonly("job_id", &JobCompletion::job_id)
      .def_readonly("time", &JobCompletion::time);

  py::class_<ReplayLog>(m, "ReplayLog")
      .def_readonly("events", &ReplayLog::events)
      .def_readonly("completions", &ReplayLog::completions)
      .def_readonly("total_energy", &ReplayLog::total_energy);

  m.def(
      "replay",
      [](const RequestTrace& trace, const std::string& algo,
         const std::vector<ProfilePtr>& profiles, const Platform& platform,
         std::uint64_t node_budget) {
        AlgoOptions options;
        if (node_budget > 0) options.exmem.node_budget = node_budget;
        return replay(trace, make_scheduler(algo_from_name(algo), options), profiles, platform);
      },
      py::arg("trace"), py::arg("algo"), py::arg("profiles"), py::arg("platform"),
      py::arg("node_budget") = 0);

  py::class_<EvalRecord>(m, "EvalRecord")
      .def_readonly("test_id", &EvalRecord::test_id)
      .def_readonly("algo", &EvalRecord::algo)
      .def_readonly("feasible", &EvalRecord::feasible)
      .def_readonly("reason", &EvalRecord::reason)
      .def_readonly("energy", &EvalRecord::energy)
      .def_readonly("wall_seconds", &EvalRecord::wall_seconds)
      .def_readonly("job_count", &EvalRecord::job_count)
      .def_readonly("level", &EvalRecord::level);

  m.def(
      "run_suite",
      [](const std::vector<TestCase>& cases, const std::vector<std::string>& algos,
         const Platform& platform, std::uint64_t node_budget) {
        AlgoOptions options;
        if (node_budget > 0) options.exmem.node_budget = node_budget;
        std::vector<NamedScheduler> schedulers;
        for (const auto& name : algos) {
          schedulers.push_back(make_scheduler(algo_from_name(name), options));
        }
        return run_suite(cases, schedulers, platform);
      },
      py::arg("cases"), py::arg("algos"), py::arg("platform"), py::arg("node_budget") = 0);

  py::class_<GeomeanCell>(m, "GeomeanCell")
      .def_readonly("job_count", &GeomeanCell::job_count)
      .def_readonly("level", &GeomeanCell::level)
      .def_readonly("value", &GeomeanCell::value)
      .def_readonly("case_count", &GeomeanCell::case_count);

  py::class_<GeomeanTable>(m, "GeomeanTable")
      .def_readonly("algo", &GeomeanTable::algo)
      .def_readonly("baseline", &GeomeanTable::baseline)
      .def_readonly("cells", &GeomeanTable::cells)
      .def_readonly("overall_weak", &GeomeanTable::overall_weak)
      .def_readonly("overall_tight", &GeomeanTable::overall_tight)
      .def_readonly("overall", &GeomeanTable::overall);

  m.def("relative_energy_geomean", &relative_energy_geomean, py::arg("records"),
        py::arg("baseline"));
  m.def("scurve", &scurve, py::arg("records"), py::arg("algo"), py::arg("baseline"));

  py::class_<TimingStats>(m, "TimingStats")
      .def_readonly("algo", &TimingStats::algo)
      .def_readonly("count", &TimingStats::count)
      .def_readonly("mean", &TimingStats::mean)
      .def_readonly("min", &TimingStats::min)
      .def_readonly("q1", &TimingStats::q1)
      .def_readonly("median", &TimingStats::median)
      .def_readonly("q3", &TimingStats::q3)
      .def_readonly("max", &TimingStats::max);
  m.def("timing_stats", &timing_stats, py::arg("records"));

  py::class_<ProfileSet>(m, "ProfileSet")
      .def_readonly("platform", &ProfileSet::platform)
      .def_readonly("apps", &ProfileSet::apps)
      .def("find", &ProfileSet::find, py::arg("name"));

  m.def("load_profile_set", &load_profile_set, py::arg("path"));
  m.def("load_case", &load_case, py::arg("path"), py::arg("profiles"));
  m.def("load_suite", &load_suite, py::arg("path"), py::arg("profiles"));
  m.def("load_trace", &load_trace, py::arg("path"));
}
