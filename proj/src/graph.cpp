#include "simcut/graph.hpp"

#include "simcut/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace simcut {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  validate(0);
  build_adjacency();
}

void Graph::validate(std::size_t member) const {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u >= n_ || v >= n_) {
      throw InstanceError(Violation::vertex_out_of_range, member, i,
                          "edge " + std::to_string(i) + " (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") with n = " + std::to_string(n_));
    }
    if (u == v) {
      throw InstanceError(Violation::self_loop, member, i,
                          "edge " + std::to_string(i) + " at vertex " + std::to_string(u));
    }
    std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
    if (!seen.insert(key).second) {
      throw InstanceError(Violation::duplicate_edge, member, i,
                          "edge " + std::to_string(i) + " (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
  }
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    offsets_[v + 1] += offsets_[v];
  }
  neighbors_.resize(2 * edges_.size());
  incident_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    neighbors_[fill[u]] = v;
    incident_[fill[u]++] = e;
    neighbors_[fill[v]] = u;
    incident_[fill[v]++] = e;
  }
  max_degree_ = 0;
  for (Vertex v = 0; v < n_; ++v) {
    max_degree_ = std::max(max_degree_, degree(v));
  }
}

GraphFamily::GraphFamily(std::size_t n, std::vector<Graph> graphs) : n_(n), graphs_(std::move(graphs)) {
  if (graphs_.empty()) {
    throw InstanceError(Violation::empty_family, 0, 0, "a family needs at least one graph");
  }
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].n() != n_) {
      throw InstanceError(Violation::vertex_count_mismatch, i, 0,
                          "graph " + std::to_string(i) + " has " + std::to_string(graphs_[i].n()) +
                              " vertices, family has " + std::to_string(n_));
    }
  }
}

namespace {
std::vector<Graph> build_graphs(std::size_t n, const std::vector<std::vector<Edge>>& edge_lists) {
  std::vector<Graph> graphs;
  graphs.reserve(edge_lists.size());
  for (std::size_t i = 0; i < edge_lists.size(); ++i) {
    try {
      graphs.emplace_back(n, edge_lists[i]);
    } catch (const InstanceError& err) {
      throw InstanceError(err.kind(), i, err.item(), "graph " + std::to_string(i) + ": " + err.what());
    }
  }
  return graphs;
}
} // namespace

GraphFamily::GraphFamily(std::size_t n, const std::vector<std::vector<Edge>>& edge_lists)
    : GraphFamily(n, build_graphs(n, edge_lists)) {}

std::size_t GraphFamily::total_degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& g : graphs_) {
    d += g.degree(v);
  }
  return d;
}

} // namespace simcut
