#pragma once

#include "simcut/assignment.hpp"
#include "simcut/event_spec.hpp"
#include "simcut/fraction.hpp"
#include "simcut/graph.hpp"
#include "simcut/hypergraph.hpp"

#include <span>
#include <vector>

namespace simcut {

/// P[X_e = 1 | decided labels] over uniform completions of the undecided vertices of e.
Fraction conditional_edge_prob(std::span<const Vertex> edge, const Assignment& a, const EventSpec& spec);
Fraction conditional_edge_prob(const Edge& edge, const Assignment& a, const EventSpec& spec);

/// E[X_e X_f | decided labels]. Vertex-disjoint edges are conditionally
/// independent; overlapping edges are averaged over the classes of their
/// shared undecided vertices.
Fraction conditional_joint_prob(std::span<const Vertex> e, std::span<const Vertex> f, const Assignment& a,
                                const EventSpec& spec);
Fraction conditional_joint_prob(const Edge& e, const Edge& f, const Assignment& a, const EventSpec& spec);

struct Moments {
  Fraction mean;   // E[X | U]
  Fraction second; // E[X^2 | U]

  Fraction deviation(const Fraction& center) const { return center * center - Fraction(2) * center * mean + second; }

  friend bool operator==(const Moments&, const Moments&) = default;
};

/// Per-edge decomposition of the conditional second moment:
///   E[X^2|U] = S1 + (S1^2 - S2 - A) + J
/// where A sums p_e p_f and J sums E[X_e X_f|U] over ordered pairs of
/// distinct edges sharing a vertex; the bracket is the disjoint-pair part.
struct ConditionalMoments {
  std::vector<Fraction> edge_probs;
  Fraction s1;
  Fraction s2;
  Fraction adjacent_products;
  Fraction adjacent_joint;

  Moments moments() const;
};

/// Reference decomposition built pair by pair from conditional_edge_prob and
/// conditional_joint_prob: O(m^2) pairs, used as the oracle for the fast path.
ConditionalMoments conditional_moment_terms(const Graph& g, const Assignment& a, const EventSpec& spec);
ConditionalMoments conditional_moment_terms(const Hypergraph& h, const Assignment& a, const EventSpec& spec);

/// Exact conditional first and second moments. Graphs use per-class lookup
/// tables and neighbor-label histograms (O(m + n k^2)); hypergraphs use the
/// overlapping-edge lists (O(m * overlap)).
Moments conditional_moments(const Graph& g, const Assignment& a, const EventSpec& spec);
Moments conditional_moments(const Hypergraph& h, const Assignment& a, const EventSpec& spec);
Moments conditional_moments(const Instance& instance, const Assignment& a, const EventSpec& spec);

/// Double value of one term given its exact numerator E[(X - center)^2 | U].
double term_value(const Fraction& deviation, const EventSpec& spec);

/// Sum over specs of E[(X - center)^2 | U] / normalizer.
double estimator_value(const Instance& instance, const Assignment& a, std::span<const EventSpec> specs);

} // namespace simcut
