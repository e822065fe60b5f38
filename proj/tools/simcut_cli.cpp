// Command-line driver: gen, partition, verify, oracle, bench.
//
// Exit codes: 0 every constraint holds, 1 a constraint fails (or mc ran out
// of tries), 2 bad input or a broken precondition.

#include "CLI11.hpp"

#include "simcut/bench.hpp"
#include "simcut/bounds.hpp"
#include "simcut/counting.hpp"
#include "simcut/errors.hpp"
#include "simcut/generators.hpp"
#include "simcut/instance_io.hpp"
#include "simcut/oracle.hpp"
#include "simcut/run_report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace simcut;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_labels(const Assignment& a) {
  std::string out;
  for (Label l : a.labels()) {
    out += (out.empty() ? "" : " ") + std::to_string(l);
  }
  return out;
}

struct GenArgs {
  std::string kind;
  GeneratorParams params;
  std::string out;
};

struct PartitionArgs {
  std::string instance;
  std::string method = "derand";
  std::string theorem = "1";
  int k = 2;
  std::string epsilon;
  bool balanced = false;
  double slack = 0.0;
  std::uint64_t seed = 0;
  std::size_t max_tries = 64;
  std::string order = "natural";
  bool trace = false;
  std::string out;
};

struct VerifyArgs {
  std::string instance;
  std::string report;
};

struct OracleArgs {
  std::string instance;
  std::string objective = "maxcut";
  int k = 2;
  std::size_t graph = 0;
  std::vector<double> thresholds;
};

struct BenchArgs {
  std::string suite;
  std::string reports;
  std::size_t threads = 0;
  std::string replay_dir = ".";
};

int run_gen(const GenArgs& args) {
  write_output(args.out, serialize(generate(generator_from_string(args.kind), args.params)));
  return kPass;
}

int run_partition_cmd(const PartitionArgs& args, bool slack_given) {
  const Instance instance = load_instance(args.instance);
  PartitionRequest req;
  req.method = method_from_string(args.method);
  req.guarantee.theorem = theorem_from_string(args.theorem);
  req.guarantee.k = args.k;
  if (args.epsilon == "max") {
    req.guarantee.epsilon = thm3_epsilon_limit(member_count(instance), args.k);
  } else if (!args.epsilon.empty()) {
    try {
      req.guarantee.epsilon = std::stod(args.epsilon);
    } catch (const std::exception&) {
      throw ContractError("--epsilon expects a number or 'max', got '" + args.epsilon + "'");
    }
  }
  req.order = vertex_order_from_string(args.order);
  req.balanced = args.balanced;
  if (slack_given) {
    req.slack = args.slack;
  }
  req.max_tries = args.max_tries;
  req.seed = args.seed;
  req.trace = args.trace;

  const RunReport report = run_partition(instance, req);
  write_output(args.out, format_run_report(report));
  if (!report.pass()) {
    std::cerr << (report.method == Method::mc ? "mc exhausted " + std::to_string(report.tries_used) + " tries"
                                              : std::string("constraint failed"))
              << '\n';
    return kFail;
  }
  return kPass;
}

int run_verify(const VerifyArgs& args) {
  const Instance instance = load_instance(args.instance);
  std::ifstream in(args.report);
  if (!in) {
    throw std::runtime_error("cannot read " + args.report);
  }
  const VerifyResult v = verify_run_report(instance, parse_run_report(in));
  for (const auto& m : v.mismatches) {
    std::cout << "mismatch " << m << '\n';
  }
  std::cout << "consistent " << (v.consistent ? "yes" : "no") << '\n'
            << "status " << (v.pass ? "pass" : "fail") << '\n';
  if (!v.consistent) {
    return kInputError;
  }
  return v.pass ? kPass : kFail;
}

int run_oracle(const OracleArgs& args) {
  const Instance instance = load_instance(args.instance);
  const auto* family = std::get_if<GraphFamily>(&instance);
  if (!family) {
    throw ContractError("oracle works on graph families only");
  }

  if (args.objective == "edwards") {
    bool all = true;
    for (std::size_t i = 0; i < family->size(); ++i) {
      const Graph& g = (*family)[i];
      const std::size_t cut = max_cut_value(g);
      const bool holds = static_cast<double>(cut) >= edwards_bound(g.m());
      all = all && holds;
      std::printf("edwards graph %zu m %zu max_cut %zu bound %.17g %s\n", i, g.m(), cut, edwards_bound(g.m()),
                  holds ? "holds" : "fails");
    }
    return all ? kPass : kFail;
  }

  Objective obj;
  if (args.objective == "maxcut") {
    obj.kind = ObjectiveKind::max_cut;
    obj.graph = args.graph;
  } else if (args.objective == "simultaneous") {
    obj.kind = args.thresholds.empty() ? ObjectiveKind::simultaneous : ObjectiveKind::feasibility;
    obj.thresholds = args.thresholds;
  } else {
    throw ContractError("unknown objective '" + args.objective + "'");
  }
  const OracleResult res = enumerate_best(*family, args.k, obj);
  std::printf("objective %s\nk %d\nvisited %llu\n", args.objective.c_str(), args.k,
              static_cast<unsigned long long>(res.visited));
  if (obj.kind == ObjectiveKind::feasibility) {
    std::printf("feasible %s\n", res.value > 0.0 ? "yes" : "no");
  } else {
    std::printf("value %.17g\n", res.value);
  }
  if (obj.kind != ObjectiveKind::feasibility || res.value > 0.0) {
    std::printf("assignment %s\n", join_labels(res.best).c_str());
    for (std::size_t i = 0; i < family->size(); ++i) {
      std::printf("crossing graph %zu %zu\n", i, partition_counts((*family)[i], res.best).crossing);
    }
  }
  return obj.kind == ObjectiveKind::feasibility && res.value == 0.0 ? kFail : kPass;
}

int run_bench_cmd(const BenchArgs& args) {
  const BenchSuite suite = parse_bench_suite(read_file(args.suite));
  std::ofstream reports;
  BenchOptions opts;
  opts.threads = args.threads;
  opts.replay_dir = args.replay_dir;
  if (!args.reports.empty()) {
    reports.open(args.reports);
    if (!reports) {
      throw std::runtime_error("cannot write " + args.reports);
    }
    opts.reports = &reports;
  }
  try {
    const auto rows = run_bench(suite, opts);
    write_bench_table(std::cout, rows);
    for (const auto& row : rows) {
      if (row.failures > 0) {
        return kFail;
      }
    }
    return kPass;
  } catch (const BenchAbort& abort) {
    std::cerr << "error: " << abort.what() << '\n';
    return kFail;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous max-cut partitioner"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "gnm | disjoint-cycles | star | bounded-degree | runiform")->required();
  gen_cmd->add_option("--n", gen.params.n, "Vertices")->required();
  gen_cmd->add_option("--m", gen.params.m, "Edges per member");
  gen_cmd->add_option("--ell", gen.params.ell, "Members in the family");
  gen_cmd->add_option("--degree", gen.params.degree, "Max degree (bounded-degree)");
  gen_cmd->add_option("--r", gen.params.r, "Uniformity (runiform)");
  gen_cmd->add_option("--max-pair", gen.params.max_pair, "Cap on pair degree (runiform)");
  gen_cmd->add_option("--seed", gen.params.seed, "Seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  PartitionArgs part;
  auto* part_cmd = app.add_subcommand("partition", "Partition an instance and print a run report");
  part_cmd->add_option("instance", part.instance, "Instance file")->required();
  part_cmd->add_option("--method", part.method, "mc | derand")->check(CLI::IsMember({"mc", "derand"}));
  part_cmd->add_option("--theorem", part.theorem, "1 | 2 | 3 | hyp")->check(CLI::IsMember({"1", "2", "3", "hyp"}));
  part_cmd->add_option("--k", part.k, "Classes");
  part_cmd->add_option("--epsilon", part.epsilon, "Degree ratio for --theorem 3, or 'max'");
  part_cmd->add_flag("--balanced", part.balanced, "Require near-equal classes (mc only)");
  auto* slack_opt = part_cmd->add_option("--slack", part.slack, "Class-size slack for --balanced");
  part_cmd->add_option("--seed", part.seed, "Seed (mc)");
  part_cmd->add_option("--max-tries", part.max_tries, "Try budget (mc)");
  part_cmd->add_option("--order", part.order, "natural | degree")->check(CLI::IsMember({"natural", "degree"}));
  part_cmd->add_flag("--trace", part.trace, "Include the descent trace (derand)");
  part_cmd->add_option("--out", part.out, "Report file (default stdout)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Recheck a run report against its instance");
  ver_cmd->add_option("instance", ver.instance, "Instance file")->required();
  ver_cmd->add_option("report", ver.report, "Report file")->required();

  OracleArgs orc;
  auto* orc_cmd = app.add_subcommand("oracle", "Exhaustive search on a small instance");
  orc_cmd->add_option("instance", orc.instance, "Instance file")->required();
  orc_cmd->add_option("--objective", orc.objective, "maxcut | simultaneous | edwards")
      ->check(CLI::IsMember({"maxcut", "simultaneous", "edwards"}));
  orc_cmd->add_option("--k", orc.k, "Classes");
  orc_cmd->add_option("--graph", orc.graph, "Member for maxcut");
  orc_cmd->add_option("--threshold", orc.thresholds,
                      "Per-graph cut thresholds; turns simultaneous into a feasibility check");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("suite", bench.suite, "Suite file")->required();
  bench_cmd->add_option("--reports", bench.reports, "Write every run report here");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");
  bench_cmd->add_option("--replay-dir", bench.replay_dir, "Where failing instances are saved");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInputError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*part_cmd) return run_partition_cmd(part, slack_opt->count() > 0);
    if (*ver_cmd) return run_verify(ver);
    if (*orc_cmd) return run_oracle(orc);
    if (*bench_cmd) return run_bench_cmd(bench);
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
