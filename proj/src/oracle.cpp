#include "simcut/oracle.hpp"

#include "simcut/bounds.hpp"
#include "simcut/counting.hpp"
#include "simcut/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace simcut {

namespace {

// k^exp, or kMaxEnumeration + 1 once it exceeds the cap.
std::uint64_t capped_power(int k, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= static_cast<std::uint64_t>(k);
    if (r > kMaxEnumeration) {
      return kMaxEnumeration + 1;
    }
  }
  return r;
}

struct Evaluator {
  const GraphFamily& family;
  const Objective& objective;
  std::vector<double> centers;

  double value(const std::vector<std::int64_t>& crossing) const {
    switch (objective.kind) {
    case ObjectiveKind::max_cut:
      return static_cast<double>(crossing[objective.graph]);
    case ObjectiveKind::simultaneous:
    case ObjectiveKind::feasibility: {
      double slack = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < crossing.size(); ++i) {
        slack = std::min(slack, static_cast<double>(crossing[i]) - centers[i]);
      }
      return slack;
    }
    }
    return 0.0;
  }
};

} // namespace

OracleResult enumerate_best(const GraphFamily& family, int k, const Objective& objective) {
  if (k < 2) {
    throw ContractError("enumerate_best: k must be at least 2");
  }
  const std::size_t n = family.n();
  const std::size_t ell = family.size();
  if (capped_power(k, n) > kMaxEnumeration) {
    throw SizeLimitError("enumerate_best: k^n = " + std::to_string(k) + "^" + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(kMaxEnumeration));
  }

  Evaluator eval{family, objective, {}};
  switch (objective.kind) {
  case ObjectiveKind::max_cut:
    if (objective.graph >= ell) {
      throw ContractError("enumerate_best: graph index out of range");
    }
    break;
  case ObjectiveKind::simultaneous:
    eval.centers = objective.centers;
    if (eval.centers.empty()) {
      for (const Graph& g : family.graphs()) {
        eval.centers.push_back(static_cast<double>(k - 1) * static_cast<double>(g.m()) / k);
      }
    }
    break;
  case ObjectiveKind::feasibility:
    eval.centers = objective.thresholds;
    break;
  }
  if (objective.kind != ObjectiveKind::max_cut && eval.centers.size() != ell) {
    throw ContractError("enumerate_best: need one center/threshold per graph");
  }

  std::vector<Label> labels(n, 0);
  std::vector<std::int64_t> crossing(ell, 0);

  OracleResult result{.best = Assignment(labels, k), .value = eval.value(crossing), .visited = 1};
  if (n <= 1) {
    if (objective.kind == ObjectiveKind::feasibility) {
      result.value = result.value >= 0.0 ? 1.0 : 0.0;
    }
    return result;
  }

  // Reflected k-ary Gray code over vertices 1..n-1 (loopless, one digit moves
  // by +-1 per step). Digit j is vertex j + 1.
  const std::size_t digits = n - 1;
  std::vector<std::size_t> focus(digits + 1);
  std::vector<int> dir(digits, 1);
  for (std::size_t j = 0; j <= digits; ++j) {
    focus[j] = j;
  }
  double best = result.value;
  std::vector<Label> best_labels = labels;
  const bool stop_at_first = objective.kind == ObjectiveKind::feasibility;
  while (!(stop_at_first && best >= 0.0)) {
    const std::size_t j = focus[0];
    focus[0] = 0;
    if (j == digits) {
      break;
    }
    const Vertex v = static_cast<Vertex>(j + 1);
    const Label from = labels[v];
    const Label to = from + dir[j];
    for (std::size_t i = 0; i < ell; ++i) {
      for (Vertex u : family[i].neighbors(v)) {
        const Label lu = labels[u];
        crossing[i] += (lu == from ? 1 : 0) - (lu == to ? 1 : 0);
      }
    }
    labels[v] = to;
    if (to == 0 || to == k - 1) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
    ++result.visited;
    const double val = eval.value(crossing);
    if (val > best) {
      best = val;
      best_labels = labels;
    }
  }
  result.best = Assignment(best_labels, k);
  result.value = objective.kind == ObjectiveKind::feasibility ? (best >= 0.0 ? 1.0 : 0.0) : best;
  return result;
}

std::size_t max_cut_value(const Graph& g) {
  const GraphFamily family(g.n(), std::vector<Graph>{g});
  Objective objective;
  objective.kind = ObjectiveKind::max_cut;
  return static_cast<std::size_t>(enumerate_best(family, 2, objective).value);
}

bool edwards_check(const Graph& g) { return static_cast<double>(max_cut_value(g)) >= edwards_bound(g.m()); }

Moments moments_by_completion(const Instance& instance, const Assignment& a, const EventSpec& spec) {
  std::vector<Vertex> open;
  for (Vertex v = 0; v < a.size(); ++v) {
    if (a[v] == kUndecided) {
      open.push_back(v);
    }
  }
  if (open.size() > kMaxUndecided) {
    throw SizeLimitError("moments_by_completion: " + std::to_string(open.size()) +
                         " undecided vertices, limit is " + std::to_string(kMaxUndecided));
  }
  const std::uint64_t total = capped_power(a.k(), open.size());
  if (total > kMaxEnumeration) {
    throw SizeLimitError("moments_by_completion: too many completions");
  }
  std::vector<Label> labels(a.labels().begin(), a.labels().end());
  for (Vertex v : open) {
    labels[v] = 0;
  }
  int128 sum = 0;
  int128 sum_sq = 0;
  for (;;) {
    const Assignment full(labels, a.k());
    const int128 x = realized_count(instance, full, spec);
    sum += x;
    sum_sq += x * x;
    std::size_t i = 0;
    while (i < open.size() && ++labels[open[i]] == a.k()) {
      labels[open[i++]] = 0;
    }
    if (i == open.size()) {
      break;
    }
  }
  return {Fraction(sum, total), Fraction(sum_sq, total)};
}

} // namespace simcut
