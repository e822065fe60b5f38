#include "simcut/bench.hpp"

#include "simcut/errors.hpp"
#include "simcut/instance_io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace simcut {

namespace {

std::size_t to_size(const std::string& key, const std::string& value, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument(value);
    }
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ContractError("suite line " + std::to_string(line) + ": bad value for " + key + ": '" + value + "'");
  }
}

double to_real(const std::string& key, const std::string& value, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw ContractError("suite line " + std::to_string(line) + ": bad value for " + key + ": '" + value + "'");
  }
}

} // namespace

BenchSuite parse_bench_suite(const std::string& text) {
  BenchSuite suite;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream words(raw);
    std::string token;
    BenchEntry entry;
    bool any = false;
    bool have_gen = false;
    while (words >> token) {
      any = true;
      const auto eq = token.find('=');
      if (eq == std::string::npos) {
        throw ContractError("suite line " + std::to_string(line) + ": expected key=value, got '" + token + "'");
      }
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "reps") entry.reps = to_size(key, value, line);
      else if (key == "gen") { entry.generator = generator_from_string(value); have_gen = true; }
      else if (key == "n") entry.params.n = to_size(key, value, line);
      else if (key == "m") entry.params.m = to_size(key, value, line);
      else if (key == "ell") entry.params.ell = to_size(key, value, line);
      else if (key == "degree") entry.params.degree = to_size(key, value, line);
      else if (key == "r") entry.params.r = to_size(key, value, line);
      else if (key == "max_pair") entry.params.max_pair = to_size(key, value, line);
      else if (key == "seed") entry.params.seed = to_size(key, value, line);
      else if (key == "method") entry.method = method_from_string(value);
      else if (key == "theorem") entry.guarantee.theorem = theorem_from_string(value);
      else if (key == "k") entry.guarantee.k = static_cast<int>(to_size(key, value, line));
      else if (key == "epsilon") {
        if (value == "max") entry.epsilon_max = true;
        else entry.guarantee.epsilon = to_real(key, value, line);
      }
      else if (key == "order") entry.order = vertex_order_from_string(value);
      else if (key == "balanced") entry.balanced = to_size(key, value, line) != 0;
      else if (key == "slack") entry.slack = to_real(key, value, line);
      else if (key == "max_tries") entry.max_tries = to_size(key, value, line);
      else if (key == "label") entry.label = value;
      else throw ContractError("suite line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    if (!any) {
      continue;
    }
    if (!have_gen) {
      throw ContractError("suite line " + std::to_string(line) + ": missing gen=");
    }
    if (entry.label.empty()) {
      entry.label = to_string(entry.generator) + "/" + to_string(entry.method) + "/thm" +
                    to_string(entry.guarantee.theorem) + "/L" + std::to_string(line);
    }
    suite.entries.push_back(std::move(entry));
  }
  return suite;
}

namespace {

struct Outcome {
  bool contract_error = false;
  std::string error;
  bool guarantee_failed = false;
  std::string instance_text; // kept only for failed derand runs
  RunReport report;
};

Outcome run_one(const BenchEntry& entry, std::size_t rep) {
  Outcome out;
  GeneratorParams params = entry.params;
  params.seed = entry.params.seed + rep;
  Instance instance = generate(entry.generator, params);
  PartitionRequest req;
  req.method = entry.method;
  req.guarantee = entry.guarantee;
  if (entry.epsilon_max) {
    req.guarantee.epsilon = thm3_epsilon_limit(member_count(instance), entry.guarantee.k);
  }
  req.order = entry.order;
  req.balanced = entry.balanced;
  req.slack = entry.slack;
  req.max_tries = entry.max_tries;
  req.seed = params.seed;
  try {
    out.report = run_partition(instance, req);
    if (entry.method == Method::derand && !out.report.pass()) {
      out.guarantee_failed = true;
    }
  } catch (const ContractError& err) {
    out.contract_error = true;
    out.error = err.what();
  } catch (const std::logic_error& err) {
    // derandomize() reports an impossible terminal violation this way.
    out.guarantee_failed = true;
    out.error = err.what();
  }
  if (out.guarantee_failed) {
    out.instance_text = serialize(instance);
  }
  return out;
}

double percentile(std::vector<double> xs, double q) {
  if (xs.empty()) {
    return 0.0;
  }
  std::sort(xs.begin(), xs.end());
  const std::size_t idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(xs.size()))) - 1;
  return xs[std::min(idx, xs.size() - 1)];
}

} // namespace

std::vector<BenchRow> run_bench(const BenchSuite& suite, const BenchOptions& options) {
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t e = 0; e < suite.entries.size(); ++e) {
    for (std::size_t rep = 0; rep < suite.entries[e].reps; ++rep) {
      jobs.emplace_back(e, rep);
    }
  }
  std::vector<Outcome> outcomes(jobs.size());
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      outcomes[j] = run_one(suite.entries[jobs[j].first], jobs[j].second);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Outcome& o = outcomes[j];
    if (options.reports && !o.contract_error && o.error.empty()) {
      *options.reports << "# " << suite.entries[jobs[j].first].label << " rep " << jobs[j].second << '\n';
      write_run_report(*options.reports, o.report);
    }
    if (o.guarantee_failed) {
      const auto& entry = suite.entries[jobs[j].first];
      std::string name = "bench_failure_" + std::to_string(jobs[j].first) + "_" + std::to_string(jobs[j].second) + ".txt";
      const std::string path = (std::filesystem::path(options.replay_dir) / name).string();
      std::ofstream(path) << o.instance_text;
      throw BenchAbort("derandomized run " + entry.label + " rep " + std::to_string(jobs[j].second) +
                           " broke its guarantee" + (o.error.empty() ? "" : ": " + o.error) + "; instance saved to " +
                           path,
                       path);
    }
  }

  std::vector<BenchRow> rows;
  std::size_t j = 0;
  for (const auto& entry : suite.entries) {
    std::map<Statistic, BenchRow> by_stat;
    std::vector<double> times;
    std::size_t contract_errors = 0;
    std::size_t exhausted = 0;
    std::size_t runs = 0;
    double tries_sum = 0.0;
    std::size_t tries_max = 0;
    std::map<Statistic, double> margin_sum;
    for (std::size_t rep = 0; rep < entry.reps; ++rep, ++j) {
      const Outcome& o = outcomes[j];
      if (o.contract_error) {
        ++contract_errors;
        continue;
      }
      ++runs;
      times.push_back(o.report.wall_ms);
      if (entry.method == Method::mc) {
        tries_sum += static_cast<double>(o.report.tries_used);
        tries_max = std::max(tries_max, o.report.tries_used);
        exhausted += o.report.pass() ? 0 : 1;
      }
      for (const auto& c : o.report.report.constraints) {
        BenchRow& row = by_stat[c.statistic];
        if (row.constraints == 0) {
          row.min_margin = std::numeric_limits<double>::infinity();
        }
        ++row.constraints;
        row.failures += c.satisfied ? 0 : 1;
        row.min_margin = std::min(row.min_margin, c.margin());
        margin_sum[c.statistic] += c.margin();
      }
    }
    if (by_stat.empty()) {
      by_stat[entry.guarantee.theorem == Theorem::hyp ? Statistic::rainbow : Statistic::crossing] = BenchRow{};
    }
    for (auto& [stat, row] : by_stat) {
      row.label = entry.label;
      row.statistic = stat;
      row.runs = runs;
      row.contract_errors = contract_errors;
      row.exhausted = exhausted;
      row.mean_margin = row.constraints ? margin_sum[stat] / static_cast<double>(row.constraints) : 0.0;
      row.mean_tries = runs && entry.method == Method::mc ? tries_sum / static_cast<double>(runs) : 0.0;
      row.max_tries_used = tries_max;
      row.p50_ms = percentile(times, 0.5);
      row.p90_ms = percentile(times, 0.9);
      row.max_ms = times.empty() ? 0.0 : *std::max_element(times.begin(), times.end());
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << std::left << std::setw(34) << "entry" << std::setw(10) << "stat" << std::right << std::setw(6) << "runs"
      << std::setw(8) << "constr" << std::setw(7) << "fail" << std::setw(7) << "error" << std::setw(7) << "exh"
      << std::setw(12) << "min_margin" << std::setw(13) << "mean_margin" << std::setw(8) << "tries" << std::setw(6)
      << "maxt" << std::setw(9) << "p50_ms" << std::setw(9) << "p90_ms" << std::setw(9) << "max_ms" << '\n';
  out << std::fixed;
  for (const auto& r : rows) {
    out << std::left << std::setw(34) << r.label << std::setw(10) << to_string(r.statistic) << std::right
        << std::setw(6) << r.runs << std::setw(8) << r.constraints << std::setw(7) << r.failures << std::setw(7)
        << r.contract_errors << std::setw(7) << r.exhausted << std::setprecision(3) << std::setw(12)
        << (r.constraints ? r.min_margin : 0.0) << std::setw(13) << r.mean_margin << std::setprecision(2)
        << std::setw(8) << r.mean_tries << std::setw(6) << r.max_tries_used << std::setprecision(3) << std::setw(9)
        << r.p50_ms << std::setw(9) << r.p90_ms << std::setw(9) << r.max_ms << '\n';
  }
  out.unsetf(std::ios::fixed);
}

} // namespace simcut
