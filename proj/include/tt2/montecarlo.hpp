#pragma once

#include <cstdint>

#include "tt2/perm.hpp"

namespace tt2 {

/// SplitMix64; also used to derive independent per-trial streams.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

 private:
  std::uint64_t state_;
};

/// Seed of the stream for trial `index` under master `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Identity multiplied on the right by k atoms drawn uniformly from the
/// 2n-3 support points. Deterministic per seed.
Perm sample_walk(int n, int k, std::uint64_t seed);

struct WalkStats {
  int n = 0;
  int k = 0;
  std::uint64_t trials = 0;
  double mean_fixed_points = 0.0;
  double var_fixed_points = 0.0;  // unbiased
  double ci_half_width = 0.0;     // 95%, normal approximation
  std::uint64_t seed = 0;
  bool all_even = true;
};

/// Fixed-point statistics over independent walks; trial t uses stream_seed(seed, t),
/// so results do not depend on `threads`. Requires trials >= 100.
WalkStats estimate_stats(int n, int k, std::uint64_t trials, std::uint64_t seed,
                         unsigned threads = 1);

}  // namespace tt2
