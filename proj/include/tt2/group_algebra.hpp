#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tt2/perm.hpp"

namespace tt2 {

/// A finitely supported integer combination of permutations of one degree.
/// Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}

  static GroupAlgebraElement identity(int n);
  static GroupAlgebraElement basis(const Perm& p, std::int64_t coeff = 1);

  int degree() const { return n_; }
  std::int64_t coefficient(const Perm& p) const;
  const std::map<Perm, std::int64_t>& terms() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * p; throws std::invalid_argument on a degree mismatch.
  void add_term(const Perm& p, std::int64_t c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a -= b;
  }
  /// Product extended bilinearly from compose().
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(std::int64_t s, GroupAlgebraElement a);
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

  std::string to_string() const;

 private:
  void check_degree(int other) const;

  int n_;
  std::map<Perm, std::int64_t> coeffs_;
};

/// X_i = sum_{j<i} (j,i); X_1 = 0.
GroupAlgebraElement jm_symmetric(int i, int n);
/// Y_1 = 0, Y_2 = 1, Y_i = (1,2) X_i for i >= 3.
GroupAlgebraElement jm_alternating(int i, int n);
/// t_i = (1,2)(i,i+1).
GroupAlgebraElement t_generator(int i, int n);
/// 1 + sum_{i=1}^{n-2} ((i,n-1,n) + (i,n,n-1)), i.e. (2n-3) times the shuffle measure.
GroupAlgebraElement shuffle_element(int n);

struct AlgebraVerdict {
  bool ok = true;
  std::string detail;  // offending indices or terms when !ok
};

/// Checks P = 1 (n=2), P = 1 + Y_3 (n=3), P = t_{n-1}(Y_n + Y_{n-1}) (n>3).
AlgebraVerdict verify_lemma_P(int n);
/// Checks Y_i Y_j = Y_j Y_i for all 1 <= i, j <= n. Requires 3 <= n <= 6.
AlgebraVerdict commutation_check(int n);
/// Checks t_i Y_i = Y_{i+1} t_i - 1 for 3 <= i < n.
AlgebraVerdict jm_relation_check(int n);

}  // namespace tt2
