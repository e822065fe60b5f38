#include "simcut/report.hpp"

#include "simcut/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>

namespace simcut {

std::string to_string(Statistic s) {
  switch (s) {
  case Statistic::crossing: return "crossing";
  case Statistic::pair: return "pair";
  case Statistic::within: return "within";
  case Statistic::rainbow: return "rainbow";
  }
  return "?";
}

Statistic statistic_from_string(const std::string& s) {
  if (s == "crossing") return Statistic::crossing;
  if (s == "pair") return Statistic::pair;
  if (s == "within") return Statistic::within;
  if (s == "rainbow") return Statistic::rainbow;
  throw ContractError("unknown statistic '" + s + "'");
}

bool CutReport::all_satisfied() const {
  return satisfied_count() == constraints.size() && (!balance || balance->satisfied);
}

std::size_t CutReport::satisfied_count() const {
  return static_cast<std::size_t>(
      std::count_if(constraints.begin(), constraints.end(), [](const Constraint& c) { return c.satisfied; }));
}

double CutReport::min_margin() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : constraints) {
    best = std::min(best, c.margin());
  }
  return best;
}

namespace {

Constraint make_constraint(std::size_t graph, Statistic stat, int s, int t, std::size_t count, double threshold) {
  Constraint c;
  c.graph = graph;
  c.statistic = stat;
  c.s = s;
  c.t = t;
  c.count = static_cast<std::int64_t>(count);
  c.threshold = threshold;
  c.satisfied = static_cast<double>(count) >= threshold;
  return c;
}

void add_graph_constraints(CutReport& report, const GraphFamily& family, const Guarantee& g) {
  const std::size_t ell = family.size();
  for (std::size_t i = 0; i < ell; ++i) {
    const PartitionCounts& pc = report.graph_counts[i];
    ThresholdParams p{.m = family[i].m(), .ell = ell, .k = g.k, .epsilon = g.epsilon};
    switch (g.theorem) {
    case Theorem::thm1:
      report.constraints.push_back(
          make_constraint(i, Statistic::crossing, -1, -1, pc.crossing, threshold_for(ThresholdKind::thm1, p)));
      break;
    case Theorem::thm2:
      report.constraints.push_back(
          make_constraint(i, Statistic::crossing, -1, -1, pc.crossing, threshold_for(ThresholdKind::thm2, p)));
      break;
    case Theorem::thm3: {
      const double pair_threshold = threshold_for(ThresholdKind::thm3_pair, p);
      const double within_threshold = threshold_for(ThresholdKind::thm3_within, p);
      for (int s = 0; s < g.k; ++s) {
        for (int t = s + 1; t < g.k; ++t) {
          report.constraints.push_back(make_constraint(i, Statistic::pair, s, t, pc.pair(s, t), pair_threshold));
        }
      }
      for (int s = 0; s < g.k; ++s) {
        report.constraints.push_back(make_constraint(i, Statistic::within, s, -1,
                                                     pc.within[static_cast<std::size_t>(s)], within_threshold));
      }
      break;
    }
    case Theorem::hyp:
      throw ContractError("hyp guarantee on a graph family");
    }
  }
}

} // namespace

CutReport check_report(const Instance& instance, const Assignment& a, const Guarantee& guarantee,
                       std::optional<double> balance_slack) {
  const Guarantee g = resolve_guarantee(instance, guarantee);
  const std::size_t n = vertex_count(instance);
  require_total(a, n, "check_report");
  if (a.k() != g.k) {
    throw ContractError("assignment has " + std::to_string(a.k()) + " classes, guarantee needs " +
                        std::to_string(g.k));
  }

  CutReport report;
  report.k = g.k;
  report.class_sizes = a.class_sizes();

  if (const auto* family = std::get_if<GraphFamily>(&instance)) {
    for (const Graph& graph : family->graphs()) {
      report.graph_counts.push_back(partition_counts(graph, a));
    }
    add_graph_constraints(report, *family, g);
  } else {
    const auto& hyper = std::get<HypergraphFamily>(instance);
    for (std::size_t i = 0; i < hyper.size(); ++i) {
      const Hypergraph& h = hyper[i];
      const std::size_t count = rainbow_count(h, a);
      report.rainbow_counts.push_back(count);
      ThresholdParams p{.m = h.m(), .ell = hyper.size(), .k = g.k, .delta2 = h.delta2(), .r = g.k};
      report.constraints.push_back(
          make_constraint(i, Statistic::rainbow, -1, -1, count, threshold_for(ThresholdKind::hyp, p)));
    }
  }

  if (balance_slack) {
    if (!(*balance_slack > 0.0)) {
      throw ContractError("balance slack must be positive");
    }
    BalanceCheck b;
    b.target = static_cast<double>(n) / g.k;
    b.slack = *balance_slack;
    b.satisfied = std::all_of(report.class_sizes.begin(), report.class_sizes.end(), [&](std::size_t size) {
      return std::abs(static_cast<double>(size) - b.target) <= b.slack;
    });
    report.balance = b;
  }
  return report;
}

} // namespace simcut
