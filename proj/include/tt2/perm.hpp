#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tt2 {

enum class Parity { even, odd };

/// A permutation of {1..n} in one-line notation: images()[i-1] = pi(i).
///
/// Products follow ordinary function composition, (p*q)(i) = p(q(i)), so
/// "pi multiplied on the right by g" applies g first. Cycle notation
/// (a,b,c) maps a->b->c->a.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// The cycle (c[0], c[1], ..., c[m-1]) acting on {1..n}.
  static Perm cycle(int n, std::initializer_list<int> points);
  static Perm transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Parity parity() const;
  bool is_even() const { return parity() == Parity::even; }
  bool is_identity() const;
  Perm inverse() const;

  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// p*q : i -> p(q(i)). Throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

enum class Orientation { forward, backward };

/// forward: (i, n-1, n); backward: (i, n, n-1). Requires 1 <= i <= n-2.
Perm three_cycle(int i, int n, Orientation orientation);

int fixed_points(const Perm& p);

/// Lexicographic (Lehmer-code) index of a permutation within S_n.
struct PermRank {
  std::uint64_t value = 0;
  friend auto operator<=>(const PermRank&, const PermRank&) = default;
};

/// Largest degree whose factorial fits the 64-bit rank type.
inline constexpr int kMaxRankDegree = 20;

std::uint64_t factorial(int n);

PermRank rank(const Perm& p);
/// Throws std::out_of_range if r.value >= n!.
Perm unrank(PermRank r, int n);

/// Parity of the permutation with rank r, read off its factorial-base digits.
Parity rank_parity(PermRank r, int n);

}  // namespace tt2
