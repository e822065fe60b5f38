#include "simcut/random_partitioner.hpp"

#include "simcut/errors.hpp"

#include <cmath>
#include <string>

namespace simcut {

Assignment random_assignment(std::size_t n, int k, Rng& rng) {
  std::vector<Label> labels(n);
  for (auto& l : labels) {
    l = static_cast<Label>(rng.below(static_cast<std::uint64_t>(k)));
  }
  return Assignment(std::move(labels), k);
}

double default_balance_slack(std::size_t n, int k, std::size_t ell, std::size_t max_tries) {
  return std::sqrt(static_cast<double>(n) *
                   std::log(2.0 * k * static_cast<double>(ell) * static_cast<double>(max_tries)));
}

McConfig resolve_config(const Instance& instance, McConfig cfg) {
  if (cfg.max_tries < 1) {
    throw ContractError("max_tries must be at least 1");
  }
  cfg.guarantee = resolve_guarantee(instance, cfg.guarantee);
  if (cfg.balanced) {
    if (!cfg.balance_slack) {
      cfg.balance_slack =
          default_balance_slack(vertex_count(instance), cfg.guarantee.k, member_count(instance), cfg.max_tries);
    }
    if (!(*cfg.balance_slack > 0.0)) {
      throw ContractError("balance slack must be positive");
    }
  } else {
    cfg.balance_slack.reset();
  }
  return cfg;
}

namespace {

bool better_attempt(const CutReport& candidate, const CutReport& best) {
  const std::size_t a = candidate.satisfied_count() + (candidate.balance && candidate.balance->satisfied ? 1 : 0);
  const std::size_t b = best.satisfied_count() + (best.balance && best.balance->satisfied ? 1 : 0);
  if (a != b) {
    return a > b;
  }
  return candidate.min_margin() > best.min_margin();
}

} // namespace

McResult mc_partition(const Instance& instance, const McConfig& config) {
  const McConfig cfg = resolve_config(instance, config);
  const std::size_t n = vertex_count(instance);
  const int k = cfg.guarantee.k;

  McResult result{.success = false, .assignment = Assignment(n, k), .report = {}, .tries_used = 0};
  bool have_best = false;
  for (std::size_t t = 0; t < cfg.max_tries; ++t) {
    Rng rng(substream_seed(cfg.seed, t));
    Assignment a = random_assignment(n, k, rng);
    CutReport report = check_report(instance, a, cfg.guarantee, cfg.balance_slack);
    result.tries_used = t + 1;
    if (report.all_satisfied()) {
      result.success = true;
      result.assignment = std::move(a);
      result.report = std::move(report);
      return result;
    }
    if (!have_best || better_attempt(report, result.report)) {
      have_best = true;
      result.assignment = std::move(a);
      result.report = std::move(report);
    }
  }
  return result;
}

} // namespace simcut
