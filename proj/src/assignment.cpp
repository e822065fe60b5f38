#include "simcut/assignment.hpp"

#include "simcut/errors.hpp"

#include <algorithm>
#include <string>

namespace simcut {

Assignment::Assignment(std::size_t n, int k) : labels_(n, kUndecided), k_(k) {
  if (k < 2) {
    throw ContractError("class count must be at least 2, got " + std::to_string(k));
  }
}

Assignment::Assignment(std::vector<Label> labels, int k) : labels_(std::move(labels)), k_(k) {
  if (k < 2) {
    throw ContractError("class count must be at least 2, got " + std::to_string(k));
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] != kUndecided && (labels_[v] < 0 || labels_[v] >= k)) {
      throw ContractError("vertex " + std::to_string(v) + " has label " + std::to_string(labels_[v]) +
                          " outside 0.." + std::to_string(k - 1));
    }
  }
}

void Assignment::set(Vertex v, Label c) {
  if (c != kUndecided && (c < 0 || c >= k_)) {
    throw ContractError("label " + std::to_string(c) + " outside 0.." + std::to_string(k_ - 1));
  }
  labels_[v] = c;
}

bool Assignment::is_total() const {
  return std::none_of(labels_.begin(), labels_.end(), [](Label l) { return l == kUndecided; });
}

std::size_t Assignment::undecided_count() const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), kUndecided));
}

std::vector<std::size_t> Assignment::class_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k_), 0);
  for (Label l : labels_) {
    if (l != kUndecided) {
      ++sizes[static_cast<std::size_t>(l)];
    }
  }
  return sizes;
}

void require_total(const Assignment& a, std::size_t n, const char* what) {
  if (a.size() != n) {
    throw ContractError(std::string(what) + ": assignment covers " + std::to_string(a.size()) +
                        " vertices, instance has " + std::to_string(n));
  }
  if (!a.is_total()) {
    throw ContractError(std::string(what) + ": assignment is partial (" + std::to_string(a.undecided_count()) +
                        " undecided vertices)");
  }
}

} // namespace simcut
