#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simcut {

/// A caller broke an operation's precondition (partial assignment where a
/// total one is required, epsilon out of range, mismatched class count...).
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive routines refuse instances above their hard size guard.
class SizeLimitError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// The bounded-degree guarantee needs max degree <= epsilon * m for every graph.
class DegreeConditionError : public ContractError {
public:
  DegreeConditionError(std::size_t graph, std::size_t max_degree, std::size_t edges, double epsilon);

  std::size_t graph() const { return graph_; }

private:
  std::size_t graph_;
};

enum class Violation {
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  wrong_arity,
  repeated_vertex,
  empty_family,
  vertex_count_mismatch,
};

const char* to_string(Violation v);

/// Raised by instance constructors; `item` is the offending edge index
/// within `member` (the graph/hypergraph index inside a family).
class InstanceError : public std::invalid_argument {
public:
  InstanceError(Violation kind, std::size_t member, std::size_t item, const std::string& detail);

  Violation kind() const { return kind_; }
  std::size_t member() const { return member_; }
  std::size_t item() const { return item_; }

private:
  Violation kind_;
  std::size_t member_;
  std::size_t item_;
};

} // namespace simcut
