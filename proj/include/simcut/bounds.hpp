#pragma once

#include "simcut/hypergraph.hpp"

#include <cstddef>
#include <string>

namespace simcut {

/// Edwards' lower bound m/2 + sqrt(m/8 + 1/64) - 1/8 on the max cut of any
/// graph with m edges. Tight for complete graphs of odd order.
double edwards_bound(std::size_t m);

enum class ThresholdKind { thm1, thm2, thm3_pair, thm3_within, hyp };

struct ThresholdParams {
  std::size_t m = 0;
  std::size_t ell = 1;
  int k = 2;
  double epsilon = 0.0;
  std::size_t delta2 = 0;
  int r = 2;
};

/// Largest epsilon admitted by the bounded-degree k-partition guarantee: 1/(9 l^2 k^4).
double thm3_epsilon_limit(std::size_t ell, int k);

/// Guaranteed lower bound for one constraint:
///   thm1         m/2 - sqrt(l m / 2)
///   thm2         (k-1)m/k - sqrt(2 l m)
///   thm3_pair    2m/k^2 - eps^(1/4) m
///   thm3_within  m/k^2 - eps^(1/4) m
///   hyp          r! m / r^r - sqrt(2 l (1 + r(r-1) D2) m)
/// Throws ContractError when epsilon is outside (0, 1/(9 l^2 k^4)] for thm3.
double threshold_for(ThresholdKind kind, const ThresholdParams& params);

enum class Theorem { thm1, thm2, thm3, hyp };

std::string to_string(Theorem t);
Theorem theorem_from_string(const std::string& s);

/// Which simultaneous guarantee a partition must meet.
struct Guarantee {
  Theorem theorem = Theorem::thm1;
  int k = 2;
  double epsilon = 0.0; // thm3 only
};

/// Normalizes k (thm1 -> 2, hyp -> r) and checks every precondition of the
/// guarantee against the instance, including max degree <= eps * m_i for thm3
/// (DegreeConditionError naming the graph).
Guarantee resolve_guarantee(const Instance& instance, Guarantee g);

/// r! / r^r as a double, the probability that a random r-coloring of an r-set is rainbow.
double rainbow_probability(int r);

} // namespace simcut
