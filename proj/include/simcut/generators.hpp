#pragma once

#include "simcut/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

namespace simcut {

enum class GeneratorKind { gnm, disjoint_cycles, star, bounded_degree, runiform };

std::string to_string(GeneratorKind kind);
GeneratorKind generator_from_string(const std::string& s);

/// Union of all generator parameters; each kind reads the ones it needs.
struct GeneratorParams {
  std::size_t n = 0;
  std::size_t m = 0;         // gnm, runiform; bounded_degree: 0 = keep all
  std::size_t ell = 1;       // members in the family
  std::size_t degree = 3;    // bounded_degree: max degree per graph
  std::size_t r = 3;         // runiform
  std::size_t max_pair = 0;  // runiform: cap on D2, 0 = uncapped
  std::uint64_t seed = 0;
};

/// gnm             l independent uniform graphs with exactly m edges
/// disjoint_cycles l edge-disjoint Hamilton cycles v -> v+s (mod n), s = 1..l;
///                 n odd >= 5 and l <= (n-1)/2 with gcd(s, n) = 1
/// star            one star on n vertices centered at 0
/// bounded_degree  l graphs, each a union of `degree` random matchings
///                 (duplicates dropped), optionally truncated to m edges
/// runiform        l r-uniform hypergraphs with m distinct edges
/// Throws ContractError on inconsistent params.
Instance generate(GeneratorKind kind, const GeneratorParams& params);

} // namespace simcut
