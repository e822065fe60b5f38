#pragma once

#include "simcut/assignment.hpp"
#include "simcut/bounds.hpp"
#include "simcut/counting.hpp"
#include "simcut/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simcut {

enum class Statistic { crossing, pair, within, rainbow };

std::string to_string(Statistic s);
Statistic statistic_from_string(const std::string& s);

/// One "count >= threshold" requirement on one member of the family.
struct Constraint {
  std::size_t graph = 0;
  Statistic statistic = Statistic::crossing;
  int s = -1; // class index for pair/within
  int t = -1; // second class for pair
  std::int64_t count = 0;
  double threshold = 0.0;
  bool satisfied = false;

  double margin() const { return static_cast<double>(count) - threshold; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct BalanceCheck {
  double target = 0.0; // n / k
  double slack = 0.0;
  bool satisfied = true;

  friend bool operator==(const BalanceCheck&, const BalanceCheck&) = default;
};

struct CutReport {
  int k = 2;
  std::vector<std::size_t> class_sizes;
  std::vector<PartitionCounts> graph_counts; // graph families only
  std::vector<std::size_t> rainbow_counts;   // hypergraph families only
  std::vector<Constraint> constraints;
  std::optional<BalanceCheck> balance;

  bool all_satisfied() const;
  std::size_t satisfied_count() const;
  double min_margin() const;

  friend bool operator==(const CutReport&, const CutReport&) = default;
};

/// Recomputes every count and threshold from scratch. `balance_slack`, when
/// set, adds the |V_j| in [n/k - slack, n/k + slack] check. The guarantee is
/// resolved against the instance first.
CutReport check_report(const Instance& instance, const Assignment& a, const Guarantee& guarantee,
                       std::optional<double> balance_slack = std::nullopt);

} // namespace simcut
