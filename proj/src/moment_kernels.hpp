#pragma once

// Integer kernels shared by the moment computations and the descent engines.
// Every probability is carried as an integer scaled by P = k^a (a = edge
// arity) and every pair term by P^2, so all sums are exact.

#include "simcut/assignment.hpp"
#include "simcut/event_spec.hpp"
#include "simcut/fraction.hpp"
#include "simcut/graph.hpp"
#include "simcut/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace simcut::detail {

std::int64_t ipow(std::int64_t base, std::size_t exp);

/// Throws ContractError when k^arity is too large for the exact kernels.
void check_scale(int k, std::size_t arity);

/// P[X_e=1 | labels] * k^arity, by enumerating the undecided positions of
/// `labels` (which is modified during the call and restored).
std::int64_t scaled_weight(std::span<Label> labels, const EventSpec& spec);

/// E[X_e X_f | U] * k^(2 arity) for two edges sharing at least one vertex.
int128 scaled_overlap_joint(std::span<const Vertex> e, std::span<const Vertex> f, const Assignment& a,
                            const EventSpec& spec);

/// Lookup tables for a graph statistic, indexed by endpoint label with the
/// undecided state mapped to index k.
///   weight(x, y)     = P[X_e=1] * k^2 for an edge with endpoint labels x, y
///   correction(x, y) = (E[X_e X_f] - p_e p_f) * k^4 for edges e = {w, a},
///                      f = {w, b} with w undecided and labels x = l(a), y = l(b)
/// When the shared vertex is decided the two edges are independent and the
/// correction is zero.
class GraphTables {
public:
  explicit GraphTables(const EventSpec& spec);

  int k() const { return k_; }
  std::int64_t weight(int x, int y) const { return weight_[static_cast<std::size_t>(x * (k_ + 1) + y)]; }
  std::int64_t correction(int x, int y) const {
    return correction_[static_cast<std::size_t>(x * (k_ + 1) + y)];
  }

  /// Sum over ordered pairs of distinct neighbor slots of correction(), for
  /// an undecided vertex with neighbor-label histogram `hist` (k+1 bins).
  int128 pair_correction(std::span<const std::int64_t> hist) const;
  /// Change of pair_correction when one neighbor moves from undecided to c.
  int128 pair_correction_delta(std::span<const std::int64_t> hist, int c) const;

private:
  int k_;
  std::vector<std::int64_t> weight_;
  std::vector<std::int64_t> correction_;
};

inline int label_index(Label l, int k) { return l == kUndecided ? k : l; }

/// Exact scaled aggregates of one statistic under a partial assignment:
///   mean * P = s1,  second * P^2 = s1 P + s1^2 - s2 + c.
struct ScaledSums {
  int128 s1 = 0;
  int128 s2 = 0;
  int128 c = 0;
};

/// P^2 * E[(X - center)^2 | U] given the aggregates, as an exact fraction.
Fraction deviation_from_sums(const ScaledSums& sums, std::int64_t scale, const Fraction& center);

ScaledSums graph_sums(const Graph& g, const Assignment& a, const GraphTables& tables);

/// Edges sharing at least one vertex with each edge (excluding itself).
std::vector<std::vector<std::uint32_t>> overlap_lists(const Hypergraph& h);

ScaledSums hypergraph_sums(const Hypergraph& h, const std::vector<std::vector<std::uint32_t>>& overlaps,
                           const Assignment& a, const EventSpec& spec);

/// Scaled correction term for one ordered overlapping pair.
int128 scaled_pair_correction(std::span<const Vertex> e, std::span<const Vertex> f, const Assignment& a,
                              const EventSpec& spec);

/// Scaled weight of a stored edge under assignment `a`.
std::int64_t edge_weight(std::span<const Vertex> e, const Assignment& a, const EventSpec& spec);

} // namespace simcut::detail
