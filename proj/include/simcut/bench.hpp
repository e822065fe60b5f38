#pragma once

#include "simcut/bounds.hpp"
#include "simcut/derandomizer.hpp"
#include "simcut/generators.hpp"
#include "simcut/run_report.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace simcut {

/// One suite line: `reps` generated instances, each partitioned once.
/// Suite files hold one line per entry of whitespace-separated key=value
/// tokens, e.g.
///
///   reps=100 gen=gnm n=40 m=200 ell=2 seed=1 method=derand theorem=1
///
/// Keys: reps gen n m ell degree r max_pair seed method theorem k epsilon
/// order balanced slack max_tries label. '#' starts a comment.
struct BenchEntry {
  std::string label;
  std::size_t reps = 1;
  GeneratorKind generator = GeneratorKind::gnm;
  GeneratorParams params;
  Method method = Method::derand;
  Guarantee guarantee;
  bool epsilon_max = false; // epsilon=max: use 1/(9 l^2 k^4)
  VertexOrder order = VertexOrder::natural;
  bool balanced = false;
  std::optional<double> slack;
  std::size_t max_tries = 64;
};

struct BenchSuite {
  std::vector<BenchEntry> entries;
};

BenchSuite parse_bench_suite(const std::string& text);

/// Aggregate over one entry and one statistic class.
struct BenchRow {
  std::string label;
  Statistic statistic = Statistic::crossing;
  std::size_t runs = 0;
  std::size_t constraints = 0;
  std::size_t failures = 0;        // constraints below threshold
  std::size_t contract_errors = 0; // runs rejected by a precondition
  std::size_t exhausted = 0;       // mc runs that used up max_tries
  double min_margin = 0.0;
  double mean_margin = 0.0;
  double mean_tries = 0.0;         // mc only
  std::size_t max_tries_used = 0;  // mc only
  double p50_ms = 0.0;
  double p90_ms = 0.0;
  double max_ms = 0.0;
};

struct BenchOptions {
  std::size_t threads = 0;          // 0: hardware concurrency
  std::ostream* reports = nullptr;  // per-run RunReports, in suite order
  std::string replay_dir = ".";     // where a failing derand instance is written
};

/// A derandomized run broke its guarantee; the instance was saved for replay.
class BenchAbort : public std::runtime_error {
public:
  BenchAbort(const std::string& what, std::string replay_path)
      : std::runtime_error(what), replay_path_(std::move(replay_path)) {}
  const std::string& replay_path() const { return replay_path_; }

private:
  std::string replay_path_;
};

std::vector<BenchRow> run_bench(const BenchSuite& suite, const BenchOptions& options = {});

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace simcut
