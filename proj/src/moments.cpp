#include "simcut/moments.hpp"

#include "moment_kernels.hpp"
#include "simcut/errors.hpp"

#include <algorithm>
#include <array>
#include <variant>

namespace simcut {

using detail::ipow;

namespace {

bool share_vertex(std::span<const Vertex> e, std::span<const Vertex> f) {
  for (Vertex x : e) {
    if (std::find(f.begin(), f.end(), x) != f.end()) {
      return true;
    }
  }
  return false;
}

std::array<Vertex, 2> endpoints(const Edge& e) { return {e.u, e.v}; }

template <typename EdgeAt>
ConditionalMoments pairwise_terms(std::size_t m, EdgeAt edge_at, const Assignment& a, const EventSpec& spec) {
  ConditionalMoments cm;
  cm.edge_probs.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const auto ed = edge_at(e);
    const Fraction p = conditional_edge_prob(std::span<const Vertex>(ed), a, spec);
    cm.edge_probs.push_back(p);
    cm.s1 += p;
    cm.s2 += p * p;
  }
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < m; ++f) {
      const auto ed = edge_at(e);
      const auto fd = edge_at(f);
      const std::span<const Vertex> es(ed);
      const std::span<const Vertex> fs(fd);
      if (e == f || !share_vertex(es, fs)) {
        continue;
      }
      cm.adjacent_products += cm.edge_probs[e] * cm.edge_probs[f];
      cm.adjacent_joint += conditional_joint_prob(es, fs, a, spec);
    }
  }
  return cm;
}

Moments moments_from_sums(const detail::ScaledSums& sums, std::int64_t scale) {
  const int128 P = scale;
  return {Fraction(sums.s1, P), Fraction(sums.s1 * P + sums.s1 * sums.s1 - sums.s2 + sums.c, P * P)};
}

void check_edge(std::span<const Vertex> edge, const Assignment& a) {
  for (Vertex v : edge) {
    if (v >= a.size()) {
      throw ContractError("edge endpoint outside the assignment");
    }
  }
}

} // namespace

Fraction conditional_edge_prob(std::span<const Vertex> edge, const Assignment& a, const EventSpec& spec) {
  check_edge(edge, a);
  detail::check_scale(spec.k, edge.size());
  return Fraction(detail::edge_weight(edge, a, spec), ipow(spec.k, edge.size()));
}

Fraction conditional_edge_prob(const Edge& edge, const Assignment& a, const EventSpec& spec) {
  const auto ed = endpoints(edge);
  return conditional_edge_prob(std::span<const Vertex>(ed), a, spec);
}

Fraction conditional_joint_prob(std::span<const Vertex> e, std::span<const Vertex> f, const Assignment& a,
                                const EventSpec& spec) {
  if (!share_vertex(e, f)) {
    return conditional_edge_prob(e, a, spec) * conditional_edge_prob(f, a, spec);
  }
  check_edge(e, a);
  check_edge(f, a);
  detail::check_scale(spec.k, std::max(e.size(), f.size()));
  return Fraction(detail::scaled_overlap_joint(e, f, a, spec),
                  static_cast<int128>(ipow(spec.k, e.size())) * ipow(spec.k, f.size()));
}

Fraction conditional_joint_prob(const Edge& e, const Edge& f, const Assignment& a, const EventSpec& spec) {
  const auto ed = endpoints(e);
  const auto fd = endpoints(f);
  return conditional_joint_prob(std::span<const Vertex>(ed), std::span<const Vertex>(fd), a, spec);
}

Moments ConditionalMoments::moments() const {
  return {s1, s1 + (s1 * s1 - s2 - adjacent_products) + adjacent_joint};
}

ConditionalMoments conditional_moment_terms(const Graph& g, const Assignment& a, const EventSpec& spec) {
  return pairwise_terms(g.m(), [&](std::size_t e) { return endpoints(g.edge(e)); }, a, spec);
}

ConditionalMoments conditional_moment_terms(const Hypergraph& h, const Assignment& a, const EventSpec& spec) {
  return pairwise_terms(h.m(), [&](std::size_t e) { return h.edge(e); }, a, spec);
}

Moments conditional_moments(const Graph& g, const Assignment& a, const EventSpec& spec) {
  if (a.size() != g.n()) {
    throw ContractError("assignment size does not match the graph");
  }
  const detail::GraphTables tables(spec);
  return moments_from_sums(detail::graph_sums(g, a, tables), ipow(spec.k, 2));
}

Moments conditional_moments(const Hypergraph& h, const Assignment& a, const EventSpec& spec) {
  if (a.size() != h.n()) {
    throw ContractError("assignment size does not match the hypergraph");
  }
  detail::check_scale(spec.k, h.r());
  const auto overlaps = detail::overlap_lists(h);
  return moments_from_sums(detail::hypergraph_sums(h, overlaps, a, spec), ipow(spec.k, h.r()));
}

Moments conditional_moments(const Instance& instance, const Assignment& a, const EventSpec& spec) {
  return std::visit([&](const auto& family) { return conditional_moments(family[spec.graph], a, spec); }, instance);
}

double term_value(const Fraction& deviation, const EventSpec& spec) {
  return static_cast<double>(deviation.num()) / (static_cast<double>(deviation.den()) * spec.normalizer);
}

double estimator_value(const Instance& instance, const Assignment& a, std::span<const EventSpec> specs) {
  double total = 0.0;
  for (const auto& spec : specs) {
    total += term_value(conditional_moments(instance, a, spec).deviation(spec.center), spec);
  }
  return total;
}

} // namespace simcut
