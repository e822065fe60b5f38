#pragma once

#include "simcut/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace simcut {

using Label = std::int32_t;
inline constexpr Label kUndecided = -1;

/// Per-vertex class labels in 0..k-1, or kUndecided.
class Assignment {
public:
  /// All vertices undecided.
  Assignment(std::size_t n, int k);
  /// Throws ContractError for k < 2 or a label outside {kUndecided, 0..k-1}.
  Assignment(std::vector<Label> labels, int k);

  int k() const { return k_; }
  std::size_t size() const { return labels_.size(); }
  Label operator[](Vertex v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }

  void set(Vertex v, Label c);
  void clear(Vertex v) { labels_[v] = kUndecided; }

  bool is_total() const;
  std::size_t undecided_count() const;
  /// Sizes of V_0..V_{k-1}; undecided vertices are not counted.
  std::vector<std::size_t> class_sizes() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

private:
  std::vector<Label> labels_;
  int k_;
};

/// Throws ContractError unless `a` is total and sized for `n` vertices.
void require_total(const Assignment& a, std::size_t n, const char* what);

} // namespace simcut
