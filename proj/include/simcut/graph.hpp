#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace simcut {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// the constructor rejects self-loops, duplicate edges and out-of-range
/// endpoints with an InstanceError.
class Graph {
public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }

  /// Neighbors of v, and the ids of the corresponding edges (same order).
  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  std::span<const std::uint32_t> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], degree(v)};
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  // `member` is only used to label errors raised for a family position.
  friend class GraphFamily;
  void validate(std::size_t member) const;
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<std::uint32_t> incident_;
  std::size_t max_degree_ = 0;
};

/// l >= 1 simple graphs on one shared vertex set.
class GraphFamily {
public:
  GraphFamily(std::size_t n, std::vector<Graph> graphs);
  /// Convenience: validates and builds each graph from its edge list.
  GraphFamily(std::size_t n, const std::vector<std::vector<Edge>>& edge_lists);

  std::size_t n() const { return n_; }
  std::size_t size() const { return graphs_.size(); }
  const Graph& operator[](std::size_t i) const { return graphs_[i]; }
  std::span<const Graph> graphs() const { return graphs_; }

  /// Sum of degrees over all graphs.
  std::size_t total_degree(Vertex v) const;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

private:
  std::size_t n_;
  std::vector<Graph> graphs_;
};

} // namespace simcut
