// Command-line front end: schedule / generate / replay / evaluate / validate
// over the JSON file formats of the library.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segsched/algorithms.hpp"
#include "segsched/evalharness.hpp"
#include "segsched/io.hpp"
#include "segsched/workload.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitRejected = 3;

using namespace segsched;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_schedule(const Schedule& schedule, const std::vector<Job>& jobs) {
  for (const auto& seg : schedule.segments) {
    std::printf("[%g, %g):", seg.start, seg.end);
    bool first = true;
    for (const auto& nu : seg.assignments) {
      std::printf("%s job%d@%s", first ? "" : ",", nu.job.id,
                  format_point(nu.point(), schedule.platform).c_str());
      first = false;
    }
    if (seg.assignments.empty()) std::printf(" idle");
    std::printf("\n");
  }
  std::printf("total energy: %.4f J\n", schedule.segments.empty() ? 0.0 : schedule_energy(schedule));
  (void)jobs;
}

int cmd_schedule(const std::string& profile_path, const std::string& case_path,
                 const std::string& algo_name, std::uint64_t node_budget,
                 const std::string& out_path) {
  const ProfileSet profiles = load_profile_set(profile_path);
  const TestCase tc = load_case(case_path, profiles);
  const double t_now = tc.activation_time();

  AlgoOptions options;
  if (node_budget > 0) options.exmem.node_budget = node_budget;
  const Algo algo = algo_from_name(algo_name);
  const ScheduleResult result = run_scheduler(algo, tc.jobs, profiles.platform, t_now, options);

  if (!result.feasible()) {
    std::printf("%s: %s\n", tc.id.c_str(), to_string(result.status).c_str());
    return kExitRejected;
  }
  print_schedule(*result.schedule, tc.jobs);
  if (!out_path.empty()) save_schedule(*result.schedule, out_path);
  return kExitOk;
}

int cmd_generate(const std::string& profile_path, int count, std::uint64_t seed,
                 const SuiteMix& mix, const std::string& out_path) {
  const ProfileSet profiles = load_profile_set(profile_path);
  const std::vector<TestCase> cases = generate_suite(profiles.apps, count, mix, seed);
  save_suite(cases, seed, out_path);
  std::printf("wrote %zu cases to %s\n", cases.size(), out_path.c_str());
  return kExitOk;
}

int cmd_replay(const std::string& profile_path, const std::string& trace_path,
               const std::string& algo_name, std::uint64_t node_budget) {
  const ProfileSet profiles = load_profile_set(profile_path);
  const RequestTrace trace = load_trace(trace_path);

  AlgoOptions options;
  if (node_budget > 0) options.exmem.node_budget = node_budget;
  const NamedScheduler scheduler = make_scheduler(algo_from_name(algo_name), options);
  const ReplayLog log = replay(trace, scheduler, profiles.apps, profiles.platform);

  for (const auto& event : log.events) {
    std::printf("t=%g job%d %s (schedule energy %.4f J)\n", event.time, event.job_id,
                event.admitted ? "admitted" : "rejected", event.schedule_energy);
  }
  for (const auto& done : log.completions) {
    std::printf("t=%g job%d completed\n", done.time, done.job_id);
  }
  std::printf("total consumed energy: %.4f J\n", log.total_energy);

  bool any_rejected = false;
  for (const auto& event : log.events) any_rejected |= !event.admitted;
  return any_rejected ? kExitRejected : kExitOk;
}

int cmd_evaluate(const std::string& profile_path, const std::string& suite_path,
                 const std::string& algos_csv, std::uint64_t node_budget,
                 const std::string& out_dir) {
  const ProfileSet profiles = load_profile_set(profile_path);
  const std::vector<TestCase> cases = load_suite(suite_path, profiles);

  AlgoOptions options;
  if (node_budget > 0) options.exmem.node_budget = node_budget;
  std::vector<NamedScheduler> algos;
  for (const auto& name : split_csv(algos_csv)) {
    algos.push_back(make_scheduler(algo_from_name(name), options));
  }
  if (algos.empty()) throw std::runtime_error("--algos: no algorithms given");

  const std::vector<EvalRecord> records = run_suite(cases, algos, profiles.platform);

  std::filesystem::create_directories(out_dir);
  save_records_csv(records, out_dir + "/records.csv");
  const std::string baseline = "exmem";
  save_summary_json(records, baseline, out_dir + "/summary.json");

  for (const auto& table : relative_energy_geomean(records, baseline)) {
    std::printf("%s vs %s:\n", table.algo.c_str(), table.baseline.c_str());
    for (const auto& cell : table.cells) {
      if (!cell.value) continue;
      std::printf("  %d jobs, %-5s: %.4f  (%d cases)\n", cell.job_count,
                  to_string(cell.level).c_str(), *cell.value, cell.case_count);
    }
    if (table.overall) std::printf("  overall: %.4f\n", *table.overall);
  }
  for (const auto& stats : timing_stats(records)) {
    std::printf("%s timing: mean %.3f ms, median %.3f ms, max %.3f ms\n", stats.algo.c_str(),
                stats.mean * 1000.0, stats.median * 1000.0, stats.max * 1000.0);
  }
  std::printf("wrote %s/records.csv and %s/summary.json\n", out_dir.c_str(), out_dir.c_str());
  return kExitOk;
}

int cmd_validate(const std::string& profile_path, const std::string& case_path,
                 const std::string& schedule_path) {
  const ProfileSet profiles = load_profile_set(profile_path);
  const TestCase tc = load_case(case_path, profiles);
  const Schedule schedule = load_schedule(schedule_path, tc.jobs, profiles.platform);

  const ValidationReport report = validate(schedule, tc.jobs, profiles.platform,
                                           tc.activation_time());
  if (report.ok()) {
    std::printf("ok: schedule satisfies all constraints for case '%s'\n", tc.id.c_str());
    return kExitOk;
  }
  for (const auto& v : report.violations) {
    std::printf("violation");
    if (v.segment_index >= 0) std::printf(" [segment %d]", v.segment_index);
    if (v.job_id >= 0) std::printf(" [job %d]", v.job_id);
    std::printf(": %s\n", v.message.c_str());
  }
  return 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segmented multi-application scheduling for heterogeneous multi-cores"};
  app.require_subcommand(1);

  std::string profile_path, case_path, trace_path, suite_path, schedule_path, out_path;
  std::string algo_name = "mdf", algos_csv = "mdf,lr,exmem", out_dir = "eval_out";
  std::uint64_t node_budget = 0, seed = 42;
  int count = 100;
  SuiteMix mix;

  auto* schedule = app.add_subcommand("schedule", "Compute a schedule for one test case");
  schedule->add_option("--profile", profile_path, "application profile file")->required();
  schedule->add_option("--case", case_path, "test case file")->required();
  schedule->add_option("--algo", algo_name, "mdf | lr | exmem | fixed");
  schedule->add_option("--node-budget", node_budget, "exmem search budget (0 = default)");
  schedule->add_option("--out", out_path, "write the schedule as JSON");

  auto* generate = app.add_subcommand("generate", "Generate a random test suite");
  generate->add_option("--profile", profile_path, "application profile file")->required();
  generate->add_option("--count", count, "number of test cases");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--out", out_path, "suite output file")->required();
  generate->add_option("--tight-prob", mix.tight_prob, "probability of a tight-deadline case");
  generate->add_option("--single-app-prob", mix.single_app_prob, "probability of a single-app case");
  generate->add_option("--zero-progress-prob", mix.zero_progress_prob,
                       "probability that all jobs start fresh");

  auto* replay_cmd = app.add_subcommand("replay", "Replay a request trace through a scheduler");
  replay_cmd->add_option("--profile", profile_path, "application profile file")->required();
  replay_cmd->add_option("--trace", trace_path, "trace file")->required();
  replay_cmd->add_option("--algo", algo_name, "mdf | lr | exmem | fixed");
  replay_cmd->add_option("--node-budget", node_budget, "exmem search budget (0 = default)");

  auto* evaluate = app.add_subcommand("evaluate", "Run algorithms over a suite and write metrics");
  evaluate->add_option("--profile", profile_path, "application profile file")->required();
  evaluate->add_option("--suite", suite_path, "suite file")->required();
  evaluate->add_option("--algos", algos_csv, "comma-separated algorithm list");
  evaluate->add_option("--node-budget", node_budget, "exmem search budget (0 = default)");
  evaluate->add_option("--out", out_dir, "output directory");

  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule against a test case");
  validate_cmd->add_option("--profile", profile_path, "application profile file")->required();
  validate_cmd->add_option("--case", case_path, "test case file")->required();
  validate_cmd->add_option("--schedule", schedule_path, "schedule file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (schedule->parsed()) {
      return cmd_schedule(profile_path, case_path, algo_name, node_budget, out_path);
    }
    if (generate->parsed()) return cmd_generate(profile_path, count, seed, mix, out_path);
    if (replay_cmd->parsed()) return cmd_replay(profile_path, trace_path, algo_name, node_budget);
    if (evaluate->parsed()) {
      return cmd_evaluate(profile_path, suite_path, algos_csv, node_budget, out_dir);
    }
    if (validate_cmd->parsed()) return cmd_validate(profile_path, case_path, schedule_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
