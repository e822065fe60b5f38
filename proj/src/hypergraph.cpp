#include "simcut/hypergraph.hpp"

#include "simcut/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace simcut {

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<std::vector<Vertex>> edges) : n_(n), r_(r) {
  validate(0, edges);
  flat_.reserve(edges.size() * r);
  for (const auto& e : edges) {
    flat_.insert(flat_.end(), e.begin(), e.end());
  }

  offsets_.assign(n_ + 1, 0);
  for (Vertex v : flat_) {
    ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    offsets_[v + 1] += offsets_[v];
  }
  incident_.resize(flat_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  std::unordered_map<std::uint64_t, std::size_t> pair_count;
  for (std::uint32_t e = 0; e < m(); ++e) {
    auto ed = edge(e);
    for (std::size_t i = 0; i < r_; ++i) {
      incident_[fill[ed[i]]++] = e;
      for (std::size_t j = i + 1; j < r_; ++j) {
        Vertex a = std::min(ed[i], ed[j]);
        Vertex b = std::max(ed[i], ed[j]);
        std::size_t c = ++pair_count[(std::uint64_t{a} << 32) | b];
        delta2_ = std::max(delta2_, c);
      }
    }
  }
}

void Hypergraph::validate(std::size_t member, const std::vector<std::vector<Vertex>>& edges) const {
  if (r_ < 2) {
    throw InstanceError(Violation::wrong_arity, member, 0, "uniformity must be at least 2");
  }
  std::set<std::vector<Vertex>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.size() != r_) {
      throw InstanceError(Violation::wrong_arity, member, i,
                          "edge " + std::to_string(i) + " has " + std::to_string(e.size()) + " vertices, expected " +
                              std::to_string(r_));
    }
    for (Vertex v : e) {
      if (v >= n_) {
        throw InstanceError(Violation::vertex_out_of_range, member, i,
                            "edge " + std::to_string(i) + " names vertex " + std::to_string(v) +
                                " with n = " + std::to_string(n_));
      }
    }
    std::vector<Vertex> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InstanceError(Violation::repeated_vertex, member, i, "edge " + std::to_string(i));
    }
    if (!seen.insert(std::move(sorted)).second) {
      throw InstanceError(Violation::duplicate_edge, member, i, "edge " + std::to_string(i));
    }
  }
}

HypergraphFamily::HypergraphFamily(std::size_t n, std::size_t r, std::vector<Hypergraph> members)
    : n_(n), r_(r), members_(std::move(members)) {
  if (members_.empty()) {
    throw InstanceError(Violation::empty_family, 0, 0, "a family needs at least one hypergraph");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].n() != n_) {
      throw InstanceError(Violation::vertex_count_mismatch, i, 0,
                          "hypergraph " + std::to_string(i) + " has " + std::to_string(members_[i].n()) +
                              " vertices, family has " + std::to_string(n_));
    }
    if (members_[i].r() != r_) {
      throw InstanceError(Violation::wrong_arity, i, 0,
                          "hypergraph " + std::to_string(i) + " is " + std::to_string(members_[i].r()) +
                              "-uniform, family is " + std::to_string(r_) + "-uniform");
    }
  }
}

std::size_t HypergraphFamily::total_degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& h : members_) {
    d += h.degree(v);
  }
  return d;
}

std::size_t vertex_count(const Instance& instance) {
  return std::visit([](const auto& f) { return f.n(); }, instance);
}

std::size_t member_count(const Instance& instance) {
  return std::visit([](const auto& f) { return f.size(); }, instance);
}

std::size_t member_edges(const Instance& instance, std::size_t member) {
  return std::visit([member](const auto& f) { return f[member].m(); }, instance);
}

} // namespace simcut
