#include "simcut/counting.hpp"

#include "simcut/errors.hpp"

#include <string>

namespace simcut {

std::size_t crossing_count(const Graph& g, const Assignment& a) {
  require_total(a, g.n(), "crossing_count");
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) {
    count += a[u] != a[v] ? 1 : 0;
  }
  return count;
}

PartitionCounts partition_counts(const Graph& g, const Assignment& a) {
  require_total(a, g.n(), "partition_counts");
  const int k = a.k();
  PartitionCounts c;
  c.k = k;
  c.within.assign(static_cast<std::size_t>(k), 0);
  c.pairs.assign(static_cast<std::size_t>(k * k), 0);
  for (const auto& [u, v] : g.edges()) {
    const Label s = a[u];
    const Label t = a[v];
    if (s == t) {
      ++c.within[static_cast<std::size_t>(s)];
    } else {
      ++c.pairs[static_cast<std::size_t>(s * k + t)];
      ++c.pairs[static_cast<std::size_t>(t * k + s)];
    }
  }
  std::size_t inside = 0;
  for (std::size_t w : c.within) {
    inside += w;
  }
  c.crossing = g.m() - inside;
  return c;
}

std::size_t rainbow_count(const Hypergraph& h, const Assignment& a) {
  if (static_cast<std::size_t>(a.k()) != h.r()) {
    throw ContractError("rainbow_count needs k = r, got k = " + std::to_string(a.k()) +
                        ", r = " + std::to_string(h.r()));
  }
  require_total(a, h.n(), "rainbow_count");
  std::size_t count = 0;
  std::vector<char> hit(h.r());
  for (std::size_t e = 0; e < h.m(); ++e) {
    std::fill(hit.begin(), hit.end(), 0);
    std::size_t distinct = 0;
    for (Vertex v : h.edge(e)) {
      auto& slot = hit[static_cast<std::size_t>(a[v])];
      distinct += slot ? 0 : 1;
      slot = 1;
    }
    count += distinct == h.r() ? 1 : 0;
  }
  return count;
}

} // namespace simcut
