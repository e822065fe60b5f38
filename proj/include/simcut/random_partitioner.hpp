#pragma once

#include "simcut/assignment.hpp"
#include "simcut/bounds.hpp"
#include "simcut/hypergraph.hpp"
#include "simcut/report.hpp"
#include "simcut/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace simcut {

struct McConfig {
  Guarantee guarantee;
  bool balanced = false;
  /// Defaults to sqrt(n ln(2 k l max_tries)) when balanced and unset.
  std::optional<double> balance_slack;
  std::size_t max_tries = 64;
  std::uint64_t seed = 0;
};

/// Each vertex independently uniform over k classes.
Assignment random_assignment(std::size_t n, int k, Rng& rng);

double default_balance_slack(std::size_t n, int k, std::size_t ell, std::size_t max_tries);

struct McResult {
  bool success = false;
  /// The first satisfying try, or on exhaustion the best attempt (most
  /// constraints satisfied, then largest minimum margin).
  Assignment assignment;
  CutReport report;
  std::size_t tries_used = 0;
};

/// Samples independent uniform partitions until every constraint of the
/// guarantee (and the balance window, if requested) holds, or max_tries is
/// reached. Try t draws from substream t of cfg.seed.
///
/// Per-try failure probability is at most 1/2 for thm1/thm2/hyp and 3/4 for
/// thm3 (union bound over Chebyshev tails), ignoring balance.
McResult mc_partition(const Instance& instance, const McConfig& cfg);

/// The normalized guarantee plus effective slack for a config; throws on an
/// invalid config.
McConfig resolve_config(const Instance& instance, McConfig cfg);

} // namespace simcut
