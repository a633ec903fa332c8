#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tt2/bigint.hpp"

namespace tt2 {

/// Per-step record of the mixing bounds. Natural logarithms throughout.
struct BoundPoint {
  int k = 0;
  double ub_spectral = 0.0;
  double ub_envelope = 0.0;
  double lb_fixedpoint = 0.0;
  double e_k = 0.0;
  double v_k = 0.0;
};

/// Diaconis-Shahshahani bound 1/2 sqrt(sum mult (num/(2n-3))^{2k}) over the
/// non-trivial spectrum, computed once per n and reused across k.
class SpectralBound {
 public:
  explicit SpectralBound(int n);
  int degree() const { return n_; }
  double operator()(int k) const;

 private:
  int n_;
  std::vector<std::pair<double, double>> terms_;  // (|eigenvalue|, multiplicity)
};

double upper_bound_spectral(int n, int k);

/// 1/2 sqrt(exp(n^2 exp(-2k/(n-1.5))) - 1 + n! e^{-k}), evaluated in log space.
double upper_bound_envelope(int n, int k);

/// Mean number of fixed points after k steps: 1 + (n-3) r^k + ((n-3)/(2n-3))^k (1+(-1)^k).
double e_k_fixed_points(int n, int k);
double v_k_fixed_points(int n, int k);
Rational e_k_fixed_points_exact(int n, int k);
Rational v_k_fixed_points_exact(int n, int k);

/// max(0, 1 - 4 v_k / e_k^2 - 2 / e_k), clamped to [0, 1].
double lower_bound_fixedpoint(int n, int k);

/// (n - 3/2) ln n.
double cutoff_time(int n);

/// Fills every field except ub_spectral, which needs a SpectralBound.
BoundPoint closed_form_point(int n, int k);

}  // namespace tt2
