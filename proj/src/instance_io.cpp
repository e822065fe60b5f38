#include "simcut/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace simcut {

const char* to_string(ParseIssue issue) {
  switch (issue) {
  case ParseIssue::syntax: return "syntax error";
  case ParseIssue::bad_header: return "bad header";
  case ParseIssue::self_loop: return "self-loop";
  case ParseIssue::duplicate_edge: return "duplicate edge";
  case ParseIssue::index_out_of_range: return "vertex index out of range";
  case ParseIssue::count_mismatch: return "edge count mismatch";
  case ParseIssue::wrong_arity: return "wrong number of vertices on edge line";
  case ParseIssue::repeated_vertex: return "repeated vertex in hyperedge";
  }
  return "unknown";
}

ParseError::ParseError(ParseIssue issue, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(issue) + ": " + detail), issue_(issue),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) {
      line.tokens.push_back(w);
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::uint64_t parse_number(const std::string& token, std::size_t line) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(ParseIssue::syntax, line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

} // namespace

Instance parse_instance(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) {
    throw ParseError(ParseIssue::bad_header, 1, "empty instance");
  }
  const Line& head = lines.front();
  const auto& h = head.tokens;
  bool hyper = false;
  if (h.size() == 4 && h[0] == "graphs" && h[2] == "vertices") {
    hyper = false;
  } else if (h.size() == 6 && h[0] == "hypergraphs" && h[2] == "vertices" && h[4] == "uniformity") {
    hyper = true;
  } else {
    throw ParseError(ParseIssue::bad_header, head.number,
                     "expected 'graphs <l> vertices <n>' or 'hypergraphs <l> vertices <n> uniformity <r>'");
  }
  const std::size_t ell = parse_number(h[1], head.number);
  const std::size_t n = parse_number(h[3], head.number);
  const std::size_t r = hyper ? parse_number(h[5], head.number) : 2;
  if (ell == 0) {
    throw ParseError(ParseIssue::bad_header, head.number, "a family needs at least one member");
  }
  if (n > (std::size_t{1} << 31)) {
    throw ParseError(ParseIssue::bad_header, head.number, "too many vertices");
  }
  if (hyper && (r < 2 || r > 16)) {
    throw ParseError(ParseIssue::bad_header, head.number, "uniformity must be between 2 and 16");
  }

  std::vector<std::vector<std::vector<Vertex>>> members(ell);
  std::size_t pos = 1;
  for (std::size_t i = 0; i < ell; ++i) {
    if (pos >= lines.size()) {
      throw ParseError(ParseIssue::count_mismatch, lines.back().number,
                       "missing block for member " + std::to_string(i) + " of " + std::to_string(ell));
    }
    const Line& count_line = lines[pos++];
    if (count_line.tokens.size() != 1) {
      throw ParseError(ParseIssue::count_mismatch, count_line.number,
                       "expected the edge count of member " + std::to_string(i));
    }
    const std::size_t m = parse_number(count_line.tokens[0], count_line.number);
    std::set<std::vector<Vertex>> seen;
    auto& edges = members[i];
    for (std::size_t e = 0; e < m; ++e) {
      if (pos >= lines.size() || lines[pos].tokens.size() == 1) {
        const std::size_t at = pos < lines.size() ? lines[pos].number : lines.back().number;
        throw ParseError(ParseIssue::count_mismatch, at,
                         "member " + std::to_string(i) + " declares " + std::to_string(m) + " edges, found " +
                             std::to_string(e));
      }
      const Line& el = lines[pos++];
      if (el.tokens.size() != r) {
        throw ParseError(ParseIssue::wrong_arity, el.number,
                         "expected " + std::to_string(r) + " vertices, got " + std::to_string(el.tokens.size()));
      }
      std::vector<Vertex> edge;
      for (const auto& tok : el.tokens) {
        const std::uint64_t v = parse_number(tok, el.number);
        if (v >= n) {
          throw ParseError(ParseIssue::index_out_of_range, el.number,
                           "vertex " + tok + " with n = " + std::to_string(n));
        }
        edge.push_back(static_cast<Vertex>(v));
      }
      std::vector<Vertex> key = edge;
      std::sort(key.begin(), key.end());
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
        if (!hyper) {
          throw ParseError(ParseIssue::self_loop, el.number, "edge " + el.tokens[0] + " " + el.tokens[1]);
        }
        throw ParseError(ParseIssue::repeated_vertex, el.number, "a hyperedge lists a vertex twice");
      }
      if (!seen.insert(std::move(key)).second) {
        throw ParseError(ParseIssue::duplicate_edge, el.number, "edge already listed for member " + std::to_string(i));
      }
      edges.push_back(std::move(edge));
    }
  }
  if (pos != lines.size()) {
    throw ParseError(ParseIssue::count_mismatch, lines[pos].number, "content after the last declared block");
  }

  if (hyper) {
    std::vector<Hypergraph> hs;
    for (auto& edges : members) {
      hs.emplace_back(n, r, std::move(edges));
    }
    return HypergraphFamily(n, r, std::move(hs));
  }
  std::vector<Graph> gs;
  for (const auto& edges : members) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& e : edges) {
      es.push_back({e[0], e[1]});
    }
    gs.emplace_back(n, std::move(es));
  }
  return GraphFamily(n, std::move(gs));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open instance file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize(const Instance& instance) {
  std::ostringstream out;
  if (const auto* family = std::get_if<GraphFamily>(&instance)) {
    out << "graphs " << family->size() << " vertices " << family->n() << '\n';
    for (const Graph& g : family->graphs()) {
      out << g.m() << '\n';
      for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
      }
    }
  } else {
    const auto& hf = std::get<HypergraphFamily>(instance);
    out << "hypergraphs " << hf.size() << " vertices " << hf.n() << " uniformity " << hf.r() << '\n';
    for (const Hypergraph& h : hf.members()) {
      out << h.m() << '\n';
      for (std::size_t e = 0; e < h.m(); ++e) {
        const auto ed = h.edge(e);
        for (std::size_t i = 0; i < ed.size(); ++i) {
          out << (i ? " " : "") << ed[i];
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write instance file '" + path + "'");
  }
  out << serialize(instance);
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize(instance)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

} // namespace simcut
