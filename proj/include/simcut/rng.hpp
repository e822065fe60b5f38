#pragma once

#include <cstdint>
#include <random>

namespace simcut {

/// Seeded 64-bit generator with bit-identical output on every platform.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded integers use rejection sampling on raw 64-bit draws
/// rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined.
///
/// Stream splitting: independent substream `i` of a base seed is seeded with
/// substream_seed(seed, i) = splitmix64(seed ^ splitmix64(i + 1)). The
/// Monte-Carlo partitioner uses substream `t` for try `t` (0-based), so try
/// results do not depend on how many tries ran before.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace simcut
