#pragma once

#include "simcut/errors.hpp"
#include "simcut/hypergraph.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace simcut {

enum class ParseIssue {
  syntax,
  bad_header,
  self_loop,
  duplicate_edge,
  index_out_of_range,
  count_mismatch,
  wrong_arity,
  repeated_vertex,
};

const char* to_string(ParseIssue issue);

class ParseError : public std::runtime_error {
public:
  ParseError(ParseIssue issue, std::size_t line, const std::string& detail);

  ParseIssue issue() const { return issue_; }
  std::size_t line() const { return line_; }

private:
  ParseIssue issue_;
  std::size_t line_;
};

/// Text instance format (UTF-8, LF-terminated, '#' starts a comment line):
///
///   graphs <l> vertices <n>
///   <m_1>
///   <u> <v>          (m_1 lines)
///   ...              (l blocks)
///
/// or, for r-uniform hypergraphs,
///
///   hypergraphs <l> vertices <n> uniformity <r>
///   <m_1>
///   <v_1> ... <v_r>  (m_1 lines)
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

std::string serialize(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

/// FNV-1a 64 over the serialized form, as 16 hex digits.
std::string instance_digest(const Instance& instance);

} // namespace simcut
