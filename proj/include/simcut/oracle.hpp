#pragma once

#include "simcut/assignment.hpp"
#include "simcut/event_spec.hpp"
#include "simcut/graph.hpp"
#include "simcut/hypergraph.hpp"
#include "simcut/moments.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace simcut {

/// Hard cap on k^n for exhaustive enumeration.
inline constexpr std::uint64_t kMaxEnumeration = 100'000'000;
/// Hard cap on undecided vertices for completion averaging.
inline constexpr std::size_t kMaxUndecided = 12;

enum class ObjectiveKind {
  max_cut,      // maximize the (multiway) crossing count of one graph
  simultaneous, // maximize min_i (crossing_i - center_i)
  feasibility,  // find a partition with crossing_i >= threshold_i for all i
};

struct Objective {
  ObjectiveKind kind = ObjectiveKind::max_cut;
  std::size_t graph = 0;        // max_cut
  std::vector<double> centers;  // simultaneous; defaults to (k-1) m_i / k
  std::vector<double> thresholds; // feasibility
};

struct OracleResult {
  Assignment best;
  /// max_cut: the crossing count; simultaneous: the min slack;
  /// feasibility: 1 if feasible, else 0.
  double value = 0.0;
  std::uint64_t visited = 0;
};

/// Exact optimum over all k-partitions with vertex 0 pinned to class 0 (all
/// objectives are label-symmetric). Partitions are visited in reflected
/// k-ary Gray-code order with incremental count updates. Throws
/// SizeLimitError when k^n exceeds kMaxEnumeration.
OracleResult enumerate_best(const GraphFamily& family, int k, const Objective& objective);

/// Largest bipartite crossing count of g.
std::size_t max_cut_value(const Graph& g);

/// Whether the max cut of g reaches edwards_bound(m).
bool edwards_check(const Graph& g);

/// Average of X and X^2 over every completion of the undecided vertices,
/// counting with the plain counting routines. Throws SizeLimitError with
/// more than kMaxUndecided undecided vertices or k^u above kMaxEnumeration.
Moments moments_by_completion(const Instance& instance, const Assignment& a, const EventSpec& spec);

} // namespace simcut
