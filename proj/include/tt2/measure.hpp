#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tt2/bigint.hpp"
#include "tt2/perm.hpp"

namespace tt2 {

/// One support point of the shuffle measure with probability numerator/denominator.
struct Atom {
  Perm perm;
  std::int64_t numerator = 0;
};

/// The transpose top-2 with random shuffle measure on A_n: the identity and
/// the 3-cycles (i,n-1,n), (i,n,n-1) for i = 1..n-2, each with mass 1/(2n-3).
class MeasureSpec {
 public:
  MeasureSpec(int n, std::int64_t denominator, std::vector<Atom> atoms);

  int degree() const { return n_; }
  std::int64_t denominator() const { return denominator_; }
  /// Identity first, then (1,fwd), (1,bwd), (2,fwd), ...
  std::span<const Atom> atoms() const { return atoms_; }

 private:
  int n_;
  std::int64_t denominator_;
  std::vector<Atom> atoms_;
};

/// Throws std::invalid_argument for n < 3.
MeasureSpec build_measure(int n);

/// Exact mass of p. Throws std::invalid_argument on degree mismatch.
Rational prob(const MeasureSpec& m, const Perm& p);

/// The 2n-4 non-identity atoms, in atom order: (i, fwd) then (i, bwd) for i ascending.
std::vector<Perm> shuffle_generators(int n);

}  // namespace tt2
