#include "simcut/generators.hpp"

#include "simcut/errors.hpp"
#include "simcut/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace simcut {

std::string to_string(GeneratorKind kind) {
  switch (kind) {
  case GeneratorKind::gnm: return "gnm";
  case GeneratorKind::disjoint_cycles: return "disjoint-cycles";
  case GeneratorKind::star: return "star";
  case GeneratorKind::bounded_degree: return "bounded-degree";
  case GeneratorKind::runiform: return "runiform";
  }
  return "?";
}

GeneratorKind generator_from_string(const std::string& s) {
  if (s == "gnm") return GeneratorKind::gnm;
  if (s == "disjoint-cycles") return GeneratorKind::disjoint_cycles;
  if (s == "star") return GeneratorKind::star;
  if (s == "bounded-degree") return GeneratorKind::bounded_degree;
  if (s == "runiform") return GeneratorKind::runiform;
  throw ContractError("unknown generator '" + s + "'");
}

namespace {

template <typename T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[rng.below(i)]);
  }
}

std::uint64_t pair_key(Vertex a, Vertex b) {
  return (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
}

Graph random_gnm(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t total = n < 2 ? 0 : n * (n - 1) / 2;
  std::vector<Edge> edges;
  edges.reserve(m);
  if (2 * m > total) {
    std::vector<Edge> all;
    all.reserve(total);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        all.push_back({u, v});
      }
    }
    shuffle(all, rng);
    edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (edges.size() < m) {
      Vertex u = static_cast<Vertex>(rng.below(n));
      Vertex v = static_cast<Vertex>(rng.below(n));
      if (u == v || !seen.insert(pair_key(u, v)).second) {
        continue;
      }
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_bounded_degree(std::size_t n, std::size_t degree, std::size_t m, Rng& rng) {
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Vertex> perm(n);
  for (std::size_t round = 0; round < degree; ++round) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    shuffle(perm, rng);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
      const Vertex u = perm[i];
      const Vertex v = perm[i + 1];
      if (seen.insert(pair_key(u, v)).second) {
        edges.push_back({std::min(u, v), std::max(u, v)});
      }
    }
  }
  if (m > 0 && m < edges.size()) {
    shuffle(edges, rng);
    edges.resize(m);
  }
  return Graph(n, std::move(edges));
}

Hypergraph random_uniform(std::size_t n, std::size_t r, std::size_t m, std::size_t max_pair, Rng& rng) {
  std::set<std::vector<Vertex>> seen;
  std::unordered_map<std::uint64_t, std::size_t> pair_count;
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  const std::size_t max_attempts = 1000 * (m + 1);
  for (std::size_t attempt = 0; edges.size() < m; ++attempt) {
    if (attempt == max_attempts) {
      throw ContractError("runiform: could not place " + std::to_string(m) + " edges under the given limits");
    }
    // Partial Fisher-Yates picks r distinct vertices.
    for (std::size_t i = 0; i < r; ++i) {
      std::swap(pool[i], pool[i + rng.below(n - i)]);
    }
    std::vector<Vertex> edge(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r));
    std::vector<Vertex> key = edge;
    std::sort(key.begin(), key.end());
    if (seen.count(key)) {
      continue;
    }
    if (max_pair > 0) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        for (std::size_t j = i + 1; j < r && ok; ++j) {
          auto it = pair_count.find(pair_key(key[i], key[j]));
          ok = it == pair_count.end() || it->second < max_pair;
        }
      }
      if (!ok) {
        continue;
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        ++pair_count[pair_key(key[i], key[j])];
      }
    }
    seen.insert(std::move(key));
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, r, std::move(edges));
}

} // namespace

Instance generate(GeneratorKind kind, const GeneratorParams& p) {
  if (p.ell < 1) {
    throw ContractError("generate: ell must be at least 1");
  }
  switch (kind) {
  case GeneratorKind::gnm: {
    if (p.n >= 2 && p.m > p.n * (p.n - 1) / 2) {
      throw ContractError("gnm: m = " + std::to_string(p.m) + " exceeds n(n-1)/2 = " +
                          std::to_string(p.n * (p.n - 1) / 2));
    }
    if (p.n < 2 && p.m > 0) {
      throw ContractError("gnm: no room for edges with n < 2");
    }
    std::vector<Graph> gs;
    for (std::size_t i = 0; i < p.ell; ++i) {
      Rng rng(substream_seed(p.seed, i));
      gs.push_back(random_gnm(p.n, p.m, rng));
    }
    return GraphFamily(p.n, std::move(gs));
  }
  case GeneratorKind::disjoint_cycles: {
    if (p.n < 5 || p.n % 2 == 0) {
      throw ContractError("disjoint-cycles: n must be odd and at least 5");
    }
    if (p.ell > (p.n - 1) / 2) {
      throw ContractError("disjoint-cycles: at most (n-1)/2 edge-disjoint Hamilton cycles");
    }
    std::vector<Graph> gs;
    for (std::size_t s = 1; s <= p.ell; ++s) {
      if (std::gcd(s, p.n) != 1) {
        throw ContractError("disjoint-cycles: step " + std::to_string(s) + " does not give a Hamilton cycle for n = " +
                            std::to_string(p.n));
      }
      std::vector<Edge> edges;
      for (std::size_t v = 0; v < p.n; ++v) {
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + s) % p.n)});
      }
      gs.emplace_back(p.n, std::move(edges));
    }
    return GraphFamily(p.n, std::move(gs));
  }
  case GeneratorKind::star: {
    if (p.n < 2) {
      throw ContractError("star: n must be at least 2");
    }
    std::vector<Edge> edges;
    for (Vertex v = 1; v < p.n; ++v) {
      edges.push_back({0, v});
    }
    return GraphFamily(p.n, std::vector<Graph>{Graph(p.n, std::move(edges))});
  }
  case GeneratorKind::bounded_degree: {
    if (p.degree < 1) {
      throw ContractError("bounded-degree: degree must be at least 1");
    }
    std::vector<Graph> gs;
    for (std::size_t i = 0; i < p.ell; ++i) {
      Rng rng(substream_seed(p.seed, i));
      gs.push_back(random_bounded_degree(p.n, p.degree, p.m, rng));
    }
    return GraphFamily(p.n, std::move(gs));
  }
  case GeneratorKind::runiform: {
    if (p.r < 2 || p.r > p.n) {
      throw ContractError("runiform: need 2 <= r <= n");
    }
    std::vector<Hypergraph> hs;
    for (std::size_t i = 0; i < p.ell; ++i) {
      Rng rng(substream_seed(p.seed, i));
      hs.push_back(random_uniform(p.n, p.r, p.m, p.max_pair, rng));
    }
    return HypergraphFamily(p.n, p.r, std::move(hs));
  }
  }
  throw ContractError("generate: unknown kind");
}

} // namespace simcut
