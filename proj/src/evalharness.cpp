#include "segsched/evalharness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace segsched {

std::vector<EvalRecord> run_suite(const std::vector<TestCase>& cases,
                                  const std::vector<NamedScheduler>& algos,
                                  const Platform& platform) {
  if (cases.empty()) throw std::invalid_argument("run_suite: empty case list");

  std::vector<EvalRecord> records;
  records.reserve(cases.size() * algos.size());

  for (const auto& tc : cases) {
    const double t_now = tc.activation_time();
    for (const auto& algo : algos) {
      EvalRecord rec;
      rec.test_id = tc.id;
      rec.algo = algo.name;
      rec.job_count = static_cast<int>(tc.jobs.size());
      rec.level = tc.level;

      const auto start = std::chrono::steady_clock::now();
      const ScheduleResult result = algo.run(tc.jobs, platform, t_now);
      const auto stop = std::chrono::steady_clock::now();
      rec.wall_seconds = std::chrono::duration<double>(stop - start).count();

      if (result.feasible()) {
        const ValidationReport report = validate(*result.schedule, tc.jobs, platform, t_now);
        if (!report.ok()) {
          std::ostringstream msg;
          msg << "scheduler '" << algo.name << "' produced an invalid schedule on case '"
              << tc.id << "':";
          for (const auto& v : report.violations) msg << " [" << v.message << "]";
          throw std::runtime_error(msg.str());
        }
        rec.feasible = true;
        rec.energy = schedule_energy(*result.schedule);
      } else {
        rec.feasible = false;
        rec.reason = to_string(result.status);
      }
      records.push_back(std::move(rec));
    }
  }

  return records;
}

namespace {

// Ratios of algo energy over baseline energy on the cases feasible under
// both, keyed for grouping. Sorted before aggregation so results do not
// depend on record order.
struct Ratio {
  double value;
  int job_count;
  DeadlineLevel level;
};

std::vector<Ratio> collect_ratios(const std::vector<EvalRecord>& records, const std::string& algo,
                                  const std::string& baseline) {
  std::map<std::string, const EvalRecord*> base_by_case;
  for (const auto& rec : records) {
    if (rec.algo == baseline && rec.feasible) base_by_case[rec.test_id] = &rec;
  }
  std::vector<Ratio> ratios;
  for (const auto& rec : records) {
    if (rec.algo != algo || !rec.feasible) continue;
    auto it = base_by_case.find(rec.test_id);
    if (it == base_by_case.end()) continue;
    ratios.push_back({*rec.energy / *it->second->energy, rec.job_count, rec.level});
  }
  std::sort(ratios.begin(), ratios.end(),
            [](const Ratio& a, const Ratio& b) { return a.value < b.value; });
  return ratios;
}

std::optional<double> geomean(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  double log_sum = 0.0;
  for (double v : values) log_sum += std::log(v);
  return std::exp(log_sum / static_cast<double>(values.size()));
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.size() == 1) return sorted.front();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

} // namespace

std::vector<GeomeanTable> relative_energy_geomean(const std::vector<EvalRecord>& records,
                                                  const std::string& baseline) {
  std::vector<std::string> algos;
  std::set<int> job_counts;
  for (const auto& rec : records) {
    if (rec.algo != baseline && std::find(algos.begin(), algos.end(), rec.algo) == algos.end()) {
      algos.push_back(rec.algo);
    }
    job_counts.insert(rec.job_count);
  }
  std::sort(algos.begin(), algos.end());

  std::vector<GeomeanTable> tables;
  for (const auto& algo : algos) {
    GeomeanTable table;
    table.algo = algo;
    table.baseline = baseline;
    const std::vector<Ratio> ratios = collect_ratios(records, algo, baseline);

    for (int jobs : job_counts) {
      for (DeadlineLevel level : {DeadlineLevel::weak, DeadlineLevel::tight}) {
        GeomeanCell cell;
        cell.job_count = jobs;
        cell.level = level;
        std::vector<double> values;
        for (const auto& r : ratios) {
          if (r.job_count == jobs && r.level == level) values.push_back(r.value);
        }
        cell.case_count = static_cast<int>(values.size());
        cell.value = geomean(values);
        table.cells.push_back(std::move(cell));
      }
    }

    std::vector<double> weak, tight, all;
    for (const auto& r : ratios) {
      (r.level == DeadlineLevel::weak ? weak : tight).push_back(r.value);
      all.push_back(r.value);
    }
    table.overall_weak = geomean(weak);
    table.overall_tight = geomean(tight);
    table.overall = geomean(all);
    tables.push_back(std::move(table));
  }

  return tables;
}

std::vector<double> scurve(const std::vector<EvalRecord>& records, const std::string& algo,
                           const std::string& baseline) {
  std::vector<double> out;
  for (const auto& r : collect_ratios(records, algo, baseline)) out.push_back(r.value);
  return out; // collect_ratios already sorts ascending
}

std::vector<TimingStats> timing_stats(const std::vector<EvalRecord>& records) {
  std::map<std::string, std::vector<double>> times;
  for (const auto& rec : records) times[rec.algo].push_back(rec.wall_seconds);

  std::vector<TimingStats> out;
  for (auto& [algo, values] : times) {
    std::sort(values.begin(), values.end());
    TimingStats stats;
    stats.algo = algo;
    stats.count = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(values.size());
    stats.min = values.front();
    stats.q1 = quantile(values, 0.25);
    stats.median = quantile(values, 0.5);
    stats.q3 = quantile(values, 0.75);
    stats.max = values.back();
    out.push_back(stats);
  }
  return out;
}

} // namespace segsched
