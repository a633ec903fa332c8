#include "tt2/montecarlo.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tt2/parallel.hpp"

namespace tt2 {

SplitMix64::result_type SplitMix64::operator()() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  mix();
  return mix();
}

namespace {

/// Unbiased draw from [0, bound) by rejection.
std::uint64_t draw_below(SplitMix64& rng, std::uint64_t bound) {
  const std::uint64_t limit = rng.max() - rng.max() % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

struct Walker {
  int n;
  std::vector<int> images;  // 0-based one-line notation

  explicit Walker(int degree) : n(degree), images(static_cast<std::size_t>(degree)) {
    std::iota(images.begin(), images.end(), 0);
  }

  // atom 0 is the identity; atom 2(i-1)+1 is (i,n-1,n), 2(i-1)+2 is (i,n,n-1).
  // Right multiplication by a 3-cycle c permutes positions: new[p] = old[c(p)].
  void step(std::uint64_t atom) {
    if (atom == 0) return;
    const auto i = static_cast<std::size_t>((atom - 1) / 2);
    const auto a = static_cast<std::size_t>(n - 2);
    const auto b = static_cast<std::size_t>(n - 1);
    const int vi = images[i], va = images[a], vb = images[b];
    if ((atom - 1) % 2 == 0) {  // i -> n-1 -> n -> i
      images[i] = va;
      images[a] = vb;
      images[b] = vi;
    } else {  // i -> n -> n-1 -> i
      images[i] = vb;
      images[b] = va;
      images[a] = vi;
    }
  }

  int fixed_points() const {
    int c = 0;
    for (int p = 0; p < n; ++p) c += images[static_cast<std::size_t>(p)] == p;
    return c;
  }

  Perm to_perm() const {
    std::vector<int> img(images.size());
    for (std::size_t p = 0; p < img.size(); ++p) img[p] = images[p] + 1;
    return Perm(std::move(img));
  }
};

void check_args(int n, int k) {
  if (n < 3) throw std::invalid_argument("walk needs n >= 3, got " + std::to_string(n));
  if (k < 0) throw std::invalid_argument("walk needs k >= 0");
}

Walker run_walk(int n, int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Walker w(n);
  const auto atoms = static_cast<std::uint64_t>(2 * n - 3);
  for (int s = 0; s < k; ++s) w.step(draw_below(rng, atoms));
  return w;
}

}  // namespace

Perm sample_walk(int n, int k, std::uint64_t seed) {
  check_args(n, k);
  return run_walk(n, k, seed).to_perm();
}

WalkStats estimate_stats(int n, int k, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  check_args(n, k);
  if (trials < 100) throw std::invalid_argument("estimate_stats needs at least 100 trials");

  struct Partial {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
    bool all_even = true;
  };
  constexpr std::size_t block = 4096;
  std::vector<Partial> partial((trials + block - 1) / block);
  for_each_block(trials, block, threads, [&](std::size_t b, std::size_t e, std::size_t blk) {
    Partial p;
    for (std::size_t t = b; t < e; ++t) {
      const Walker w = run_walk(n, k, stream_seed(seed, t));
      const auto x = static_cast<std::uint64_t>(w.fixed_points());
      p.sum += x;
      p.sum_sq += x * x;
      p.all_even = p.all_even && w.to_perm().is_even();
    }
    partial[blk] = p;
  });

  Partial total;
  for (const auto& p : partial) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
    total.all_even = total.all_even && p.all_even;
  }

  WalkStats s;
  s.n = n;
  s.k = k;
  s.trials = trials;
  s.seed = seed;
  s.all_even = total.all_even;
  const auto t = static_cast<long double>(trials);
  const auto s1 = static_cast<long double>(total.sum);
  const auto s2 = static_cast<long double>(total.sum_sq);
  s.mean_fixed_points = static_cast<double>(s1 / t);
  const long double var = (s2 - s1 * s1 / t) / (t - 1.0L);
  s.var_fixed_points = static_cast<double>(var < 0 ? 0.0L : var);
  s.ci_half_width = 1.96 * std::sqrt(s.var_fixed_points / static_cast<double>(trials));
  return s;
}

}  // namespace tt2
