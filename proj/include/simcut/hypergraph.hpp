#pragma once

#include "simcut/graph.hpp"

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace simcut {

/// r-uniform hypergraph on vertices 0..n-1. Edges keep their input order
/// and vertex order; two edges with the same vertex set are duplicates.
class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::size_t r, std::vector<std::vector<Vertex>> edges);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t m() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  std::span<const Vertex> edge(std::size_t e) const { return {flat_.data() + e * r_, r_}; }

  /// Max over vertex pairs x != y of the number of edges containing both.
  std::size_t delta2() const { return delta2_; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const std::uint32_t> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], degree(v)};
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.flat_ == b.flat_;
  }

private:
  friend class HypergraphFamily;
  void validate(std::size_t member, const std::vector<std::vector<Vertex>>& edges) const;

  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> incident_;
  std::size_t delta2_ = 0;
};

class HypergraphFamily {
public:
  HypergraphFamily(std::size_t n, std::size_t r, std::vector<Hypergraph> members);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t size() const { return members_.size(); }
  const Hypergraph& operator[](std::size_t i) const { return members_[i]; }
  std::span<const Hypergraph> members() const { return members_; }

  std::size_t total_degree(Vertex v) const;

  friend bool operator==(const HypergraphFamily&, const HypergraphFamily&) = default;

private:
  std::size_t n_;
  std::size_t r_;
  std::vector<Hypergraph> members_;
};

using Instance = std::variant<GraphFamily, HypergraphFamily>;

std::size_t vertex_count(const Instance& instance);
std::size_t member_count(const Instance& instance);
std::size_t member_edges(const Instance& instance, std::size_t member);

} // namespace simcut
