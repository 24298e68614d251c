#include "segsched/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace segsched {

using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("cannot parse '" + path + "': " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error("'" + path + "': " + what);
}

} // namespace

ProfilePtr ProfileSet::find(const std::string& name) const {
  for (const auto& app : apps) {
    if (app->name == name) return app;
  }
  throw std::runtime_error("unknown application '" + name + "'");
}

ProfileSet load_profile_set(const std::string& path) {
  const json j = read_json(path);
  ProfileSet set;
  try {
    const auto& plat = j.at("platform");
    set.platform.type_names = plat.at("type_names").get<std::vector<std::string>>();
    set.platform.resource_counts = plat.at("resource_counts").get<std::vector<int>>();

    const std::size_t m = set.platform.resource_counts.size();
    if (m == 0 || set.platform.type_names.size() != m) {
      fail(path, "platform needs matching type_names and resource_counts");
    }
    bool any = false;
    for (int c : set.platform.resource_counts) {
      if (c < 0) fail(path, "negative core count");
      any |= c > 0;
    }
    if (!any) fail(path, "platform has no cores");

    for (const auto& app_json : j.at("applications")) {
      ApplicationProfile app;
      app.name = app_json.at("name").get<std::string>();
      for (const auto& pt : app_json.at("points")) {
        OperatingPoint point;
        point.resources = pt.at("resources").get<std::vector<int>>();
        point.exec_time = pt.at("exec_time_s").get<double>();
        point.energy = pt.at("energy_j").get<double>();
        if (point.resources.size() != m) {
          fail(path, "point of '" + app.name + "' has wrong resource vector length");
        }
        bool nonzero = false;
        for (int r : point.resources) {
          if (r < 0) fail(path, "negative resource demand in '" + app.name + "'");
          nonzero |= r > 0;
        }
        if (!nonzero || point.exec_time <= 0.0 || point.energy <= 0.0) {
          fail(path, "degenerate operating point in '" + app.name + "'");
        }
        app.points.push_back(std::move(point));
      }
      if (app.points.empty()) fail(path, "application '" + app.name + "' has no points");
      if (pareto_filter(app.points).size() != app.points.size()) {
        fail(path, "points of '" + app.name + "' are not Pareto-filtered");
      }
      set.apps.push_back(std::make_shared<const ApplicationProfile>(std::move(app)));
    }
    if (set.apps.empty()) fail(path, "no applications");
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
  return set;
}

namespace {

json job_to_json(const Job& job) {
  return {{"id", job.id},
          {"app", job.app->name},
          {"arrival", job.arrival},
          {"deadline", job.deadline},
          {"remaining_ratio", job.remaining_ratio}};
}

Job job_from_json(const json& j, const ProfileSet& profiles, const std::string& path) {
  Job job;
  job.id = j.at("id").get<int>();
  job.app = profiles.find(j.at("app").get<std::string>());
  job.arrival = j.at("arrival").get<double>();
  job.deadline = j.at("deadline").get<double>();
  job.remaining_ratio = j.at("remaining_ratio").get<double>();
  if (!(job.arrival < job.deadline)) fail(path, "job " + std::to_string(job.id) + " has arrival >= deadline");
  if (!(job.remaining_ratio > 0.0 && job.remaining_ratio <= 1.0)) {
    fail(path, "job " + std::to_string(job.id) + " has remaining_ratio outside (0, 1]");
  }
  return job;
}

TestCase case_from_json(const json& j, const ProfileSet& profiles, const std::string& path) {
  TestCase tc;
  tc.id = j.at("id").get<std::string>();
  tc.level = deadline_level_from_name(j.at("level").get<std::string>());
  tc.seed = j.value("seed", std::uint64_t{0});
  for (const auto& job_json : j.at("jobs")) {
    tc.jobs.push_back(job_from_json(job_json, profiles, path));
  }
  if (tc.jobs.empty()) fail(path, "case '" + tc.id + "' has no jobs");
  return tc;
}

json case_to_json(const TestCase& tc) {
  json jobs = json::array();
  for (const auto& job : tc.jobs) jobs.push_back(job_to_json(job));
  return {{"id", tc.id}, {"level", to_string(tc.level)}, {"seed", tc.seed}, {"jobs", jobs}};
}

} // namespace

TestCase load_case(const std::string& path, const ProfileSet& profiles) {
  const json j = read_json(path);
  try {
    return case_from_json(j, profiles, path);
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
}

void save_case(const TestCase& tc, const std::string& path) {
  write_json(case_to_json(tc), path);
}

std::vector<TestCase> load_suite(const std::string& path, const ProfileSet& profiles) {
  const json j = read_json(path);
  std::vector<TestCase> cases;
  try {
    for (const auto& case_json : j.at("cases")) {
      cases.push_back(case_from_json(case_json, profiles, path));
    }
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
  return cases;
}

void save_suite(const std::vector<TestCase>& cases, std::uint64_t seed, const std::string& path) {
  json arr = json::array();
  for (const auto& tc : cases) arr.push_back(case_to_json(tc));
  write_json({{"seed", seed}, {"cases", arr}}, path);
}

RequestTrace load_trace(const std::string& path) {
  const json j = read_json(path);
  RequestTrace trace;
  try {
    for (const auto& e : j.at("events")) {
      TraceEvent event;
      event.time = e.at("time").get<double>();
      event.app = e.at("app").get<std::string>();
      event.relative_deadline = e.at("relative_deadline").get<double>();
      if (event.relative_deadline <= 0.0) fail(path, "non-positive relative deadline");
      trace.events.push_back(std::move(event));
    }
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
  for (std::size_t i = 1; i < trace.events.size(); ++i) {
    if (trace.events[i].time < trace.events[i - 1].time) {
      fail(path, "events are not ordered by arrival time");
    }
  }
  return trace;
}

void save_trace(const RequestTrace& trace, const std::string& path) {
  json events = json::array();
  for (const auto& e : trace.events) {
    events.push_back(
        {{"time", e.time}, {"app", e.app}, {"relative_deadline", e.relative_deadline}});
  }
  write_json({{"events", events}}, path);
}

Schedule load_schedule(const std::string& path, const std::vector<Job>& jobs,
                       const Platform& platform) {
  const json j = read_json(path);
  Schedule schedule;
  schedule.platform = platform;
  try {
    for (const auto& seg_json : j.at("segments")) {
      MappingSegment seg;
      seg.start = seg_json.at("start").get<double>();
      seg.end = seg_json.at("end").get<double>();
      for (const auto& a : seg_json.at("assignments")) {
        const int job_id = a.at("job").get<int>();
        const int point = a.at("point").get<int>();
        const Job* job = nullptr;
        for (const auto& candidate : jobs) {
          if (candidate.id == job_id) job = &candidate;
        }
        if (!job) fail(path, "segment references unknown job " + std::to_string(job_id));
        if (point < 0 || point >= static_cast<int>(job->app->points.size())) {
          fail(path, "bad point index for job " + std::to_string(job_id));
        }
        seg.assignments.push_back({*job, point});
      }
      schedule.segments.push_back(std::move(seg));
    }
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
  return schedule;
}

void save_schedule(const Schedule& schedule, const std::string& path) {
  json segments = json::array();
  for (const auto& seg : schedule.segments) {
    json assignments = json::array();
    for (const auto& nu : seg.assignments) {
      assignments.push_back({{"job", nu.job.id}, {"point", nu.point_index}});
    }
    segments.push_back({{"start", seg.start}, {"end", seg.end}, {"assignments", assignments}});
  }
  write_json({{"segments", segments}, {"energy_j", schedule_energy(schedule)}}, path);
}

void save_records_csv(const std::vector<EvalRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "test_id,algo,feasible,energy_j,wall_ms,jobs,level\n";
  for (const auto& rec : records) {
    out << rec.test_id << ',' << rec.algo << ',' << (rec.feasible ? "true" : "false") << ',';
    if (rec.energy) out << std::setprecision(12) << *rec.energy;
    out << ',' << std::setprecision(6) << rec.wall_seconds * 1000.0 << ',' << rec.job_count << ','
        << to_string(rec.level) << '\n';
  }
}

void save_summary_json(const std::vector<EvalRecord>& records, const std::string& baseline,
                       const std::string& path) {
  json summary;
  summary["baseline"] = baseline;

  json tables = json::object();
  for (const auto& table : relative_energy_geomean(records, baseline)) {
    json cells = json::array();
    for (const auto& cell : table.cells) {
      json c = {{"jobs", cell.job_count},
                {"level", to_string(cell.level)},
                {"cases", cell.case_count}};
      if (cell.value) c["geomean"] = *cell.value;
      cells.push_back(std::move(c));
    }
    json t = {{"cells", cells}};
    if (table.overall_weak) t["overall_weak"] = *table.overall_weak;
    if (table.overall_tight) t["overall_tight"] = *table.overall_tight;
    if (table.overall) t["overall"] = *table.overall;
    tables[table.algo] = std::move(t);
  }
  summary["relative_energy"] = std::move(tables);

  json curves = json::object();
  std::vector<std::string> algos;
  for (const auto& rec : records) {
    if (std::find(algos.begin(), algos.end(), rec.algo) == algos.end()) algos.push_back(rec.algo);
  }
  for (const auto& algo : algos) {
    if (algo == baseline) continue;
    curves[algo] = scurve(records, algo, baseline);
  }
  summary["s_curves"] = std::move(curves);

  json timing = json::object();
  for (const auto& stats : timing_stats(records)) {
    timing[stats.algo] = {{"count", stats.count}, {"mean_ms", stats.mean * 1000.0},
                          {"min_ms", stats.min * 1000.0}, {"q1_ms", stats.q1 * 1000.0},
                          {"median_ms", stats.median * 1000.0}, {"q3_ms", stats.q3 * 1000.0},
                          {"max_ms", stats.max * 1000.0}};
  }
  summary["timing"] = std::move(timing);

  json feas = json::object();
  for (const auto& algo : algos) {
    int ok = 0, total = 0, budget = 0;
    for (const auto& rec : records) {
      if (rec.algo != algo) continue;
      ++total;
      if (rec.feasible) ++ok;
      if (rec.reason == "budget-exceeded") ++budget;
    }
    feas[algo] = {{"scheduled", ok}, {"total", total}, {"budget_exceeded", budget}};
  }
  summary["scheduling_rate"] = std::move(feas);

  write_json(summary, path);
}

} // namespace segsched
