#pragma once

#include "simcut/assignment.hpp"
#include "simcut/event_spec.hpp"
#include "simcut/hypergraph.hpp"
#include "simcut/report.hpp"

#include <string>
#include <vector>

namespace simcut {

enum class VertexOrder { natural, degree };

std::string to_string(VertexOrder o);
VertexOrder vertex_order_from_string(const std::string& s);

struct DescentOptions {
  VertexOrder order = VertexOrder::natural;
  /// Recompute the whole estimator from the pairwise reference moments for
  /// every candidate instead of updating incrementally. O(m^2) per candidate.
  bool naive_recompute = false;
  /// Keep every candidate's estimator value in the trace.
  bool record_candidates = true;
  /// Class count when `specs` is empty; otherwise every spec's k is used.
  int k = 2;
};

struct DescentStep {
  Vertex vertex = 0;
  Label chosen = 0;
  double value = 0.0;            // estimator after committing `chosen`
  std::vector<double> candidates; // estimator for each class, if recorded
};

struct DerandResult {
  Assignment assignment;
  CutReport report;
  double initial_value = 0.0;
  double final_value = 0.0;
  std::vector<DescentStep> trace;
};

/// Vertices 0..n-1, or by descending total degree over the family (ties by index).
std::vector<Vertex> vertex_order(const Instance& instance, VertexOrder order);

/// Method of conditional expectations. Visits vertices in the requested
/// order; for each one evaluates the estimator under all k labels and keeps
/// the smallest (lowest class on ties). Throws ContractError if the estimator
/// of the empty assignment is not below 1. The report holds one constraint
/// per spec, with threshold center - sqrt(normalizer).
DerandResult derandomize(const Instance& instance, const std::vector<EventSpec>& specs,
                         const DescentOptions& options = {});

/// Counts plus the per-spec constraints for a total assignment.
CutReport spec_report(const Instance& instance, const Assignment& a, const std::vector<EventSpec>& specs);

} // namespace simcut
