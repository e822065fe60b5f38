#include "simcut/event_spec.hpp"

#include "simcut/counting.hpp"
#include "simcut/errors.hpp"

#include <cmath>
#include <variant>

namespace simcut {

double EventSpec::threshold() const { return center.to_double() - std::sqrt(normalizer); }

Fraction statistic_mean(Statistic statistic, int k, std::size_t m) {
  const int128 mm = static_cast<int128>(m);
  const int128 kk = k;
  switch (statistic) {
  case Statistic::crossing: return Fraction((kk - 1) * mm, kk);
  case Statistic::pair: return Fraction(2 * mm, kk * kk);
  case Statistic::within: return Fraction(mm, kk * kk);
  case Statistic::rainbow: {
    int128 factorial = 1;
    int128 power = 1;
    for (int i = 1; i <= k; ++i) {
      factorial *= i;
      power *= kk;
    }
    return Fraction(factorial * mm, power);
  }
  }
  throw ContractError("unknown statistic");
}

bool statistic_holds(const EventSpec& spec, std::span<const Label> classes) {
  switch (spec.statistic) {
  case Statistic::crossing:
    for (std::size_t i = 1; i < classes.size(); ++i) {
      if (classes[i] != classes[0]) {
        return true;
      }
    }
    return false;
  case Statistic::pair:
    return classes.size() == 2 && ((classes[0] == spec.s && classes[1] == spec.t) ||
                                   (classes[0] == spec.t && classes[1] == spec.s));
  case Statistic::within:
    for (Label c : classes) {
      if (c != spec.s) {
        return false;
      }
    }
    return true;
  case Statistic::rainbow: {
    if (classes.size() != static_cast<std::size_t>(spec.k)) {
      return false;
    }
    unsigned seen = 0;
    for (Label c : classes) {
      const unsigned bit = 1u << c;
      if (seen & bit) {
        return false;
      }
      seen |= bit;
    }
    return true;
  }
  }
  return false;
}

namespace {

EventSpec make_spec(std::size_t i, Statistic stat, int k, int s, int t, std::size_t m, double normalizer) {
  EventSpec spec;
  spec.graph = i;
  spec.statistic = stat;
  spec.k = k;
  spec.s = s;
  spec.t = t;
  spec.center = statistic_mean(stat, k, m);
  spec.normalizer = normalizer;
  return spec;
}

} // namespace

std::vector<EventSpec> make_event_specs(const Instance& instance, const Guarantee& guarantee) {
  const Guarantee g = resolve_guarantee(instance, guarantee);
  const std::size_t ell = member_count(instance);
  const double l = static_cast<double>(ell);
  std::vector<EventSpec> specs;

  if (const auto* hyper = std::get_if<HypergraphFamily>(&instance)) {
    const double r = static_cast<double>(hyper->r());
    for (std::size_t i = 0; i < ell; ++i) {
      const Hypergraph& h = (*hyper)[i];
      if (h.m() == 0) {
        continue;
      }
      const double normalizer =
          2.0 * l * (1.0 + r * (r - 1.0) * static_cast<double>(h.delta2())) * static_cast<double>(h.m());
      specs.push_back(make_spec(i, Statistic::rainbow, g.k, -1, -1, h.m(), normalizer));
    }
    return specs;
  }

  const auto& family = std::get<GraphFamily>(instance);
  for (std::size_t i = 0; i < ell; ++i) {
    const std::size_t m = family[i].m();
    if (m == 0) {
      continue;
    }
    const double md = static_cast<double>(m);
    switch (g.theorem) {
    case Theorem::thm1:
      specs.push_back(make_spec(i, Statistic::crossing, 2, -1, -1, m, l * md / 2.0));
      break;
    case Theorem::thm2:
      specs.push_back(make_spec(i, Statistic::crossing, g.k, -1, -1, m, 2.0 * l * md));
      break;
    case Theorem::thm3: {
      const double normalizer = std::sqrt(g.epsilon) * md * md;
      for (int s = 0; s < g.k; ++s) {
        for (int t = s + 1; t < g.k; ++t) {
          specs.push_back(make_spec(i, Statistic::pair, g.k, s, t, m, normalizer));
        }
      }
      for (int s = 0; s < g.k; ++s) {
        specs.push_back(make_spec(i, Statistic::within, g.k, s, -1, m, normalizer));
      }
      break;
    }
    case Theorem::hyp:
      break;
    }
  }
  return specs;
}

std::int64_t realized_count(const Instance& instance, const Assignment& a, const EventSpec& spec) {
  if (const auto* hyper = std::get_if<HypergraphFamily>(&instance)) {
    if (spec.statistic != Statistic::rainbow) {
      throw ContractError("hypergraph members only support the rainbow statistic");
    }
    return static_cast<std::int64_t>(rainbow_count((*hyper)[spec.graph], a));
  }
  const auto& family = std::get<GraphFamily>(instance);
  const PartitionCounts pc = partition_counts(family[spec.graph], a);
  switch (spec.statistic) {
  case Statistic::crossing: return static_cast<std::int64_t>(pc.crossing);
  case Statistic::pair: return static_cast<std::int64_t>(pc.pair(spec.s, spec.t));
  case Statistic::within: return static_cast<std::int64_t>(pc.within[static_cast<std::size_t>(spec.s)]);
  case Statistic::rainbow: break;
  }
  throw ContractError("graph members do not support the rainbow statistic");
}

} // namespace simcut
