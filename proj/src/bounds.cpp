#include "simcut/bounds.hpp"

#include "simcut/errors.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <variant>

namespace simcut {

double edwards_bound(std::size_t m) {
  const double md = static_cast<double>(m);
  return md / 2.0 + std::sqrt(md / 8.0 + 1.0 / 64.0) - 1.0 / 8.0;
}

double thm3_epsilon_limit(std::size_t ell, int k) {
  const double l = static_cast<double>(ell);
  const double k2 = static_cast<double>(k) * k;
  return 1.0 / (9.0 * l * l * k2 * k2);
}

double rainbow_probability(int r) {
  double p = 1.0;
  for (int i = 1; i <= r; ++i) {
    p *= static_cast<double>(i) / r;
  }
  return p;
}

double threshold_for(ThresholdKind kind, const ThresholdParams& p) {
  const double m = static_cast<double>(p.m);
  const double l = static_cast<double>(p.ell);
  if (p.ell < 1) {
    throw ContractError("threshold_for: l must be at least 1");
  }
  switch (kind) {
  case ThresholdKind::thm1:
    return m / 2.0 - std::sqrt(l * m / 2.0);
  case ThresholdKind::thm2: {
    if (p.k < 2) {
      throw ContractError("threshold_for: k must be at least 2");
    }
    const double k = p.k;
    return (k - 1.0) * m / k - std::sqrt(2.0 * l * m);
  }
  case ThresholdKind::thm3_pair:
  case ThresholdKind::thm3_within: {
    if (p.k < 2) {
      throw ContractError("threshold_for: k must be at least 2");
    }
    const double limit = thm3_epsilon_limit(p.ell, p.k);
    if (!(p.epsilon > 0.0) || p.epsilon > limit) {
      std::ostringstream os;
      os.precision(17);
      os << "epsilon " << p.epsilon << " outside (0, 1/(9 l^2 k^4)] = (0, " << limit << "] for l = " << p.ell
         << ", k = " << p.k;
      throw ContractError(os.str());
    }
    const double k2 = static_cast<double>(p.k) * p.k;
    const double share = kind == ThresholdKind::thm3_pair ? 2.0 * m / k2 : m / k2;
    return share - std::pow(p.epsilon, 0.25) * m;
  }
  case ThresholdKind::hyp: {
    if (p.r < 2) {
      throw ContractError("threshold_for: r must be at least 2");
    }
    const double r = p.r;
    const double d2 = static_cast<double>(p.delta2);
    return rainbow_probability(p.r) * m - std::sqrt(2.0 * l * (1.0 + r * (r - 1.0) * d2) * m);
  }
  }
  throw ContractError("threshold_for: unknown kind");
}

std::string to_string(Theorem t) {
  switch (t) {
  case Theorem::thm1: return "1";
  case Theorem::thm2: return "2";
  case Theorem::thm3: return "3";
  case Theorem::hyp: return "hyp";
  }
  return "?";
}

Theorem theorem_from_string(const std::string& s) {
  if (s == "1" || s == "thm1") return Theorem::thm1;
  if (s == "2" || s == "thm2") return Theorem::thm2;
  if (s == "3" || s == "thm3") return Theorem::thm3;
  if (s == "hyp") return Theorem::hyp;
  throw ContractError("unknown theorem '" + s + "' (expected 1, 2, 3 or hyp)");
}

Guarantee resolve_guarantee(const Instance& instance, Guarantee g) {
  const bool hyper = std::holds_alternative<HypergraphFamily>(instance);
  switch (g.theorem) {
  case Theorem::thm1:
    if (hyper) {
      throw ContractError("guarantee thm1 applies to graph families; use hyp for hypergraphs");
    }
    g.k = 2;
    break;
  case Theorem::thm2:
    if (hyper) {
      throw ContractError("guarantee thm2 applies to graph families; use hyp for hypergraphs");
    }
    if (g.k < 2) {
      throw ContractError("k must be at least 2, got " + std::to_string(g.k));
    }
    break;
  case Theorem::thm3: {
    if (hyper) {
      throw ContractError("guarantee thm3 applies to graph families; use hyp for hypergraphs");
    }
    if (g.k < 2) {
      throw ContractError("k must be at least 2, got " + std::to_string(g.k));
    }
    const auto& family = std::get<GraphFamily>(instance);
    // Validates the epsilon range.
    threshold_for(ThresholdKind::thm3_pair, {.m = 0, .ell = family.size(), .k = g.k, .epsilon = g.epsilon});
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Graph& graph = family[i];
      if (static_cast<double>(graph.max_degree()) > g.epsilon * static_cast<double>(graph.m())) {
        throw DegreeConditionError(i, graph.max_degree(), graph.m(), g.epsilon);
      }
    }
    break;
  }
  case Theorem::hyp: {
    if (!hyper) {
      throw ContractError("hyp applies to hypergraph families");
    }
    const auto& family = std::get<HypergraphFamily>(instance);
    g.k = static_cast<int>(family.r());
    break;
  }
  }
  return g;
}

} // namespace simcut
