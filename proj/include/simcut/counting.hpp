#pragma once

#include "simcut/assignment.hpp"
#include "simcut/graph.hpp"
#include "simcut/hypergraph.hpp"

#include <cstddef>
#include <vector>

namespace simcut {

/// Edge counts of one graph under a total k-partition.
struct PartitionCounts {
  int k = 2;
  std::vector<std::size_t> within; // e(V_s)
  std::vector<std::size_t> pairs;  // e(V_s, V_t), row-major k x k, symmetric
  std::size_t crossing = 0;        // m - sum_s e(V_s)

  std::size_t pair(int s, int t) const { return pairs[static_cast<std::size_t>(s * k + t)]; }

  friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

/// Edges whose endpoints lie in different classes.
std::size_t crossing_count(const Graph& g, const Assignment& a);

PartitionCounts partition_counts(const Graph& g, const Assignment& a);

/// Hyperedges meeting every class; requires k == r.
std::size_t rainbow_count(const Hypergraph& h, const Assignment& a);

} // namespace simcut
