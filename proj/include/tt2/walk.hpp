#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tt2/bigint.hpp"
#include "tt2/measure.hpp"
#include "tt2/perm.hpp"

namespace tt2 {

enum class Mode { float64, exact };

/// Largest degree the rank-indexed engine supports (12! fits in 32 bits).
inline constexpr int kMaxWalkDegree = 12;

/// Right-multiplication cache: column c maps rank(pi) to rank(pi * g_c) for the
/// shuffle generators g_c (see shuffle_generators). A low-memory table keeps
/// no columns and recomputes ranks on demand.
class ActionTable {
 public:
  static ActionTable build(int n, unsigned threads = 1);
  static ActionTable on_the_fly(int n);

  int degree() const { return n_; }
  bool materialized() const { return !columns_.empty(); }
  std::span<const Perm> generators() const { return generators_; }
  std::size_t column_count() const { return generators_.size(); }
  std::span<const std::uint32_t> column(std::size_t c) const;
  /// Ranks of the even permutations, ascending.
  std::span<const std::uint32_t> even_ranks() const { return even_ranks_; }

  /// rank(unrank(r) * g_c), from the table or recomputed.
  std::uint32_t apply(std::size_t c, std::uint32_t r) const;

  /// Writes the cache format: "TT2S", u16 version, u16 n, then 2n-4 columns
  /// of n! little-endian u32 ranks. Requires a materialized table.
  void save(const std::filesystem::path& file) const;
  /// Throws std::runtime_error on a malformed or mismatching file.
  static ActionTable load(const std::filesystem::path& file, int n);
  /// Loads `dir`/action-n<n>.tt2s when present and valid, otherwise builds
  /// and (best effort) writes it.
  static ActionTable cached(const std::filesystem::path& dir, int n, unsigned threads = 1);
  static std::filesystem::path cache_file(const std::filesystem::path& dir, int n);

  static constexpr std::uint16_t kFormatVersion = 1;

 private:
  ActionTable(int n, std::vector<Perm> generators);
  void compute_even_ranks();

  int n_ = 0;
  std::vector<Perm> generators_;
  std::vector<std::vector<int>> generator_images_;  // 0-based
  std::vector<std::vector<std::uint32_t>> columns_;
  std::vector<std::uint32_t> even_ranks_;
};

/// The law of the walk after `step` transitions, indexed by PermRank over S_n.
/// Odd-permutation entries are identically zero. Exact mode keeps integer
/// numerators over denominator() = (2n-3)^step.
class DistVector {
 public:
  static DistVector delta_identity(int n, Mode mode);

  int degree() const { return n_; }
  Mode mode() const { return mode_; }
  int step() const { return step_; }
  std::size_t size() const;

  std::span<const double> probabilities() const;  // float64 mode only
  std::span<const BigInt> numerators() const;     // exact mode only
  const BigInt& denominator() const { return denominator_; }

  /// Mass at rank r as a double, in either mode.
  double probability(std::uint64_t r) const;
  Rational exact_probability(std::uint64_t r) const;  // exact mode only

 private:
  friend DistVector convolve_step(const DistVector&, const MeasureSpec&, const ActionTable&,
                                  unsigned);
  DistVector() = default;

  int n_ = 0;
  Mode mode_ = Mode::float64;
  int step_ = 0;
  std::variant<std::vector<double>, std::vector<BigInt>> values_;
  BigInt denominator_ = 1;
};

/// result(y) = sum_s d(y * s^-1) P(s). Throws std::invalid_argument when the
/// degrees disagree or an atom has no generator column for its inverse.
DistVector convolve_step(const DistVector& d, const MeasureSpec& m, const ActionTable& t,
                         unsigned threads = 1);

/// Total variation distance to the uniform law on A_n (mass 2/n! on even ranks).
double tv_to_uniform(const DistVector& d, unsigned threads = 1);
Rational tv_to_uniform_exact(const DistVector& d);

double expectation_fixed_points(const DistVector& d);
double second_moment_fixed_points(const DistVector& d);

struct ExactMoments {
  Rational mean;           // E(X)
  Rational second_moment;  // E(X^2)
  Rational variance() const { return second_moment - mean * mean; }
};
ExactMoments fixed_point_moments_exact(const DistVector& d);

/// TV to uniform for k = 0..k_max, starting from the identity.
std::vector<double> tv_curve(int n, int k_max, Mode mode, const ActionTable& table,
                             unsigned threads = 1);

/// Approximate working-set bytes for a walk at degree n.
std::uint64_t estimate_walk_bytes(int n, Mode mode, bool materialized_table);

}  // namespace tt2
