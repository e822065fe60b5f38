#pragma once

#include "simcut/assignment.hpp"
#include "simcut/bounds.hpp"
#include "simcut/derandomizer.hpp"
#include "simcut/hypergraph.hpp"
#include "simcut/report.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace simcut {

enum class Method { mc, derand };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Everything needed to re-derive a partition run's numbers from the
/// instance: config echo, the assignment itself, and the claimed counts.
struct RunReport {
  std::string digest;
  Method method = Method::derand;
  Guarantee guarantee;
  std::size_t ell = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  VertexOrder order = VertexOrder::natural;
  bool balanced = false;
  std::optional<double> slack;
  std::size_t max_tries = 0;
  std::vector<Label> labels;
  CutReport report;
  std::size_t tries_used = 0;   // mc
  std::size_t descent_steps = 0; // derand
  double initial_estimator = 0.0;
  double final_estimator = 0.0;
  std::vector<DescentStep> trace; // derand with --trace
  double wall_ms = 0.0;

  bool pass() const { return report.all_satisfied(); }
};

/// Line-oriented "key value..." records with a fixed field order, closed by
/// an "end" line. Reals that feed verification are printed with 17
/// significant digits so they read back bit-identically.
void write_run_report(std::ostream& out, const RunReport& r);
std::string format_run_report(const RunReport& r);

/// Reads one report; throws ParseError on malformed input.
RunReport parse_run_report(std::istream& in);
RunReport parse_run_report(const std::string& text);

struct VerifyResult {
  bool consistent = true; // every stored number matches a recomputation
  bool pass = false;      // and every constraint is satisfied
  std::vector<std::string> mismatches;
};

VerifyResult verify_run_report(const Instance& instance, const RunReport& r);

struct PartitionRequest {
  Method method = Method::derand;
  Guarantee guarantee;
  VertexOrder order = VertexOrder::natural;
  bool balanced = false;         // mc only
  std::optional<double> slack;   // mc only
  std::size_t max_tries = 64;    // mc only
  std::uint64_t seed = 0;        // mc only
  bool trace = false;            // derand only
};

/// Runs one partition and packages the result. The report's constraints come
/// from check_report, so they are exactly what verify_run_report recomputes.
/// Balanced classes are only offered by the Monte-Carlo method.
RunReport run_partition(const Instance& instance, const PartitionRequest& request);

} // namespace simcut
