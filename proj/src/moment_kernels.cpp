#include "moment_kernels.hpp"

#include "simcut/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace simcut::detail {

std::int64_t ipow(std::int64_t base, std::size_t exp) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
  }
  return r;
}

void check_scale(int k, std::size_t arity) {
  // k^(2 arity) must fit in 62 bits and k^arity completions must stay cheap.
  double bits = 2.0 * static_cast<double>(arity) * std::log2(static_cast<double>(k));
  if (k < 2 || k > 30 || bits > 62.0 || static_cast<double>(arity) * std::log2(static_cast<double>(k)) > 20.0) {
    throw ContractError("exact moments need k^arity <= 2^20, got k = " + std::to_string(k) +
                        ", arity = " + std::to_string(arity));
  }
}

namespace {

std::int64_t count_completions(std::span<Label> labels, std::size_t pos, const EventSpec& spec) {
  while (pos < labels.size() && labels[pos] != kUndecided) {
    ++pos;
  }
  if (pos == labels.size()) {
    return statistic_holds(spec, labels) ? 1 : 0;
  }
  std::int64_t total = 0;
  for (Label c = 0; c < spec.k; ++c) {
    labels[pos] = c;
    total += count_completions(labels, pos + 1, spec);
  }
  labels[pos] = kUndecided;
  return total;
}

} // namespace

std::int64_t scaled_weight(std::span<Label> labels, const EventSpec& spec) {
  std::size_t decided = 0;
  for (Label l : labels) {
    decided += l != kUndecided ? 1 : 0;
  }
  return count_completions(labels, 0, spec) * ipow(spec.k, decided);
}

std::int64_t edge_weight(std::span<const Vertex> e, const Assignment& a, const EventSpec& spec) {
  Label buf[32];
  for (std::size_t i = 0; i < e.size(); ++i) {
    buf[i] = a[e[i]];
  }
  return scaled_weight(std::span<Label>(buf, e.size()), spec);
}

int128 scaled_overlap_joint(std::span<const Vertex> e, std::span<const Vertex> f, const Assignment& a,
                            const EventSpec& spec) {
  Label le[32];
  Label lf[32];
  for (std::size_t i = 0; i < e.size(); ++i) {
    le[i] = a[e[i]];
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    lf[i] = a[f[i]];
  }
  // Shared undecided vertices, as (position in e, position in f).
  std::size_t shared_e[32];
  std::size_t shared_f[32];
  std::size_t shared = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (le[i] != kUndecided) {
      continue;
    }
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] == e[i]) {
        shared_e[shared] = i;
        shared_f[shared] = j;
        ++shared;
      }
    }
  }
  std::span<Label> se(le, e.size());
  std::span<Label> sf(lf, f.size());
  if (shared == 0) {
    return static_cast<int128>(scaled_weight(se, spec)) * scaled_weight(sf, spec);
  }
  // Odometer over the k^shared joint labelings of the shared vertices.
  std::size_t digits[32] = {};
  int128 total = 0;
  for (;;) {
    for (std::size_t s = 0; s < shared; ++s) {
      le[shared_e[s]] = static_cast<Label>(digits[s]);
      lf[shared_f[s]] = static_cast<Label>(digits[s]);
    }
    total += static_cast<int128>(scaled_weight(se, spec)) * scaled_weight(sf, spec);
    std::size_t s = 0;
    while (s < shared && ++digits[s] == static_cast<std::size_t>(spec.k)) {
      digits[s++] = 0;
    }
    if (s == shared) {
      break;
    }
  }
  // Each fixed shared vertex lifted both weights by k, so the division is exact.
  return total / ipow(spec.k, shared);
}

int128 scaled_pair_correction(std::span<const Vertex> e, std::span<const Vertex> f, const Assignment& a,
                              const EventSpec& spec) {
  return scaled_overlap_joint(e, f, a, spec) - static_cast<int128>(edge_weight(e, a, spec)) * edge_weight(f, a, spec);
}

GraphTables::GraphTables(const EventSpec& spec) : k_(spec.k) {
  check_scale(k_, 2);
  const int side = k_ + 1;
  weight_.assign(static_cast<std::size_t>(side * side), 0);
  correction_.assign(static_cast<std::size_t>(side * side), 0);
  for (int x = 0; x <= k_; ++x) {
    for (int y = 0; y <= k_; ++y) {
      Label buf[2] = {x == k_ ? kUndecided : x, y == k_ ? kUndecided : y};
      weight_[static_cast<std::size_t>(x * side + y)] = scaled_weight(std::span<Label>(buf, 2), spec);
    }
  }
  for (int x = 0; x <= k_; ++x) {
    for (int y = 0; y <= k_; ++y) {
      std::int64_t joint = 0;
      for (int c = 0; c < k_; ++c) {
        joint += weight(c, x) * weight(c, y);
      }
      correction_[static_cast<std::size_t>(x * side + y)] = joint / k_ - weight(k_, x) * weight(k_, y);
    }
  }
}

int128 GraphTables::pair_correction(std::span<const std::int64_t> hist) const {
  int128 total = 0;
  for (int x = 0; x <= k_; ++x) {
    if (hist[static_cast<std::size_t>(x)] == 0) {
      continue;
    }
    int128 row = 0;
    for (int y = 0; y <= k_; ++y) {
      row += static_cast<int128>(correction(x, y)) * hist[static_cast<std::size_t>(y)];
    }
    total += static_cast<int128>(hist[static_cast<std::size_t>(x)]) * (row - correction(x, x));
  }
  return total;
}

int128 GraphTables::pair_correction_delta(std::span<const std::int64_t> hist, int c) const {
  // Q(h) = h'Jh - diag(J)'h; moving one count from bin k to bin c changes it
  // by 2[(Jh)_c - (Jh)_k - J_ck + J_kk].
  int128 jc = 0;
  int128 ju = 0;
  for (int y = 0; y <= k_; ++y) {
    jc += static_cast<int128>(correction(c, y)) * hist[static_cast<std::size_t>(y)];
    ju += static_cast<int128>(correction(k_, y)) * hist[static_cast<std::size_t>(y)];
  }
  return 2 * (jc - ju - correction(c, k_) + correction(k_, k_));
}

Fraction deviation_from_sums(const ScaledSums& sums, std::int64_t scale, const Fraction& center) {
  const int128 p = center.num();
  const int128 q = center.den();
  const int128 P = scale;
  const int128 e2 = sums.s1 * P + sums.s1 * sums.s1 - sums.s2 + sums.c;
  return Fraction(p * p * P * P - 2 * p * q * sums.s1 * P + q * q * e2, q * q * P * P);
}

ScaledSums graph_sums(const Graph& g, const Assignment& a, const GraphTables& tables) {
  const int k = tables.k();
  ScaledSums sums;
  for (const auto& [u, v] : g.edges()) {
    const std::int64_t w = tables.weight(label_index(a[u], k), label_index(a[v], k));
    sums.s1 += w;
    sums.s2 += static_cast<int128>(w) * w;
  }
  std::vector<std::int64_t> hist(static_cast<std::size_t>(k + 1));
  for (Vertex u = 0; u < g.n(); ++u) {
    if (a[u] != kUndecided || g.degree(u) < 2) {
      continue;
    }
    std::fill(hist.begin(), hist.end(), 0);
    for (Vertex x : g.neighbors(u)) {
      ++hist[static_cast<std::size_t>(label_index(a[x], k))];
    }
    sums.c += tables.pair_correction(hist);
  }
  return sums;
}

std::vector<std::vector<std::uint32_t>> overlap_lists(const Hypergraph& h) {
  std::vector<std::vector<std::uint32_t>> lists(h.m());
  for (std::uint32_t e = 0; e < h.m(); ++e) {
    auto& list = lists[e];
    for (Vertex v : h.edge(e)) {
      for (std::uint32_t f : h.incident_edges(v)) {
        if (f != e) {
          list.push_back(f);
        }
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return lists;
}

ScaledSums hypergraph_sums(const Hypergraph& h, const std::vector<std::vector<std::uint32_t>>& overlaps,
                           const Assignment& a, const EventSpec& spec) {
  ScaledSums sums;
  for (std::uint32_t e = 0; e < h.m(); ++e) {
    const std::int64_t w = edge_weight(h.edge(e), a, spec);
    sums.s1 += w;
    sums.s2 += static_cast<int128>(w) * w;
    for (std::uint32_t f : overlaps[e]) {
      sums.c += scaled_pair_correction(h.edge(e), h.edge(f), a, spec);
    }
  }
  return sums;
}

} // namespace simcut::detail
