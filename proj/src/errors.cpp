#include "simcut/errors.hpp"

#include <sstream>

namespace simcut {

namespace {
std::string degree_message(std::size_t graph, std::size_t max_degree, std::size_t edges, double epsilon) {
  std::ostringstream os;
  os << "graph " << graph << " has max degree " << max_degree << " > epsilon * m = " << epsilon << " * " << edges;
  return os.str();
}
} // namespace

DegreeConditionError::DegreeConditionError(std::size_t graph, std::size_t max_degree, std::size_t edges,
                                           double epsilon)
    : ContractError(degree_message(graph, max_degree, edges, epsilon)), graph_(graph) {}

const char* to_string(Violation v) {
  switch (v) {
  case Violation::vertex_out_of_range: return "vertex index out of range";
  case Violation::self_loop: return "self-loop";
  case Violation::duplicate_edge: return "duplicate edge";
  case Violation::wrong_arity: return "wrong edge arity";
  case Violation::repeated_vertex: return "repeated vertex in hyperedge";
  case Violation::empty_family: return "empty family";
  case Violation::vertex_count_mismatch: return "vertex count mismatch";
  }
  return "unknown";
}

InstanceError::InstanceError(Violation kind, std::size_t member, std::size_t item, const std::string& detail)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind), member_(member),
      item_(item) {}

} // namespace simcut
