#include "tt2/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tt2/spectrum.hpp"

namespace tt2 {
namespace {

void require(bool cond, const char* what, int n) {
  if (!cond) throw std::invalid_argument(std::string(what) + " (n=" + std::to_string(n) + ")");
}

Rational rpow(const Rational& base, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

template <class T>
struct Terms {
  T r1, r2, r3, r4, neg, three;  // (2n-5), (n-3), (2n-7), (n-5), -1, 3 over (2n-3), each ^k
  T parity;                      // 1 + (-1)^k
};

template <class T, class Pow>
Terms<T> terms(int n, int k, Pow&& pw) {
  const T den = T(2 * n - 3);
  return {pw(T(2 * n - 5) / den, k), pw(T(n - 3) / den, k), pw(T(2 * n - 7) / den, k),
          pw(T(n - 5) / den, k),     pw(T(-1) / den, k),    pw(T(3) / den, k),
          T(k % 2 == 0 ? 2 : 0)};
}

template <class T>
T e_k_from(int n, const Terms<T>& t) {
  return T(1) + T(n - 3) * t.r1 + t.r2 * t.parity;
}

template <class T>
T v_k_from(int n, const Terms<T>& t) {
  const T slow = T(n - 3) * t.r1 + t.r2 * t.parity;
  const T c22 = T((n - 2) * (n - 5) / 2);
  const T c211 = T((n - 3) * (n - 4) / 2);
  return T(1) + slow - slow * slow + c22 * t.r3 + t.neg + T(n - 3) * t.r2 * t.parity +
         c211 * t.r3 + t.three + T(n - 3) * t.r4 * t.parity;
}

long double lpow(long double b, int k) { return std::pow(b, static_cast<long double>(k)); }

}  // namespace

SpectralBound::SpectralBound(int n) : n_(n) {
  require(n >= 4, "spectral bound needs n >= 4", n);
  const double den = 2.0 * n - 3.0;
  for (const auto& [num, mult] : aggregate(spectrum_of(n))) {
    if (num == 2 * n - 3) {
      if (mult != 1) throw std::logic_error("trivial eigenvalue must be simple");
      continue;
    }
    terms_.emplace_back(std::abs(num) / den, static_cast<double>(mult));
  }
}

double SpectralBound::operator()(int k) const {
  if (k < 0) throw std::invalid_argument("spectral bound needs k >= 0");
  long double s = 0.0L;
  for (const auto& [lambda, mult] : terms_) s += mult * lpow(lambda, 2 * k);
  return static_cast<double>(0.5L * std::sqrt(s));
}

double upper_bound_spectral(int n, int k) { return SpectralBound(n)(k); }

double upper_bound_envelope(int n, int k) {
  require(n >= 4, "envelope bound needs n >= 4", n);
  const double x = static_cast<double>(n) * n * std::exp(-2.0 * k / (n - 1.5));
  // log(e^x - 1)
  const double log_first = x > 30.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x));
  const double log_second = std::lgamma(n + 1.0) - k;
  const double hi = std::max(log_first, log_second);
  const double lo = std::min(log_first, log_second);
  const double log_sum = hi + std::log1p(std::exp(lo - hi));
  return 0.5 * std::exp(0.5 * log_sum);
}

double e_k_fixed_points(int n, int k) {
  require(n >= 4 && k >= 0, "e_k needs n >= 4 and k >= 0", n);
  return static_cast<double>(e_k_from(n, terms<long double>(n, k, lpow)));
}

double v_k_fixed_points(int n, int k) {
  require(n >= 5 && k >= 0, "v_k needs n >= 5 and k >= 0", n);
  return static_cast<double>(v_k_from(n, terms<long double>(n, k, lpow)));
}

Rational e_k_fixed_points_exact(int n, int k) {
  require(n >= 4 && k >= 0, "e_k needs n >= 4 and k >= 0", n);
  return e_k_from(n, terms<Rational>(n, k, rpow));
}

Rational v_k_fixed_points_exact(int n, int k) {
  require(n >= 5 && k >= 0, "v_k needs n >= 5 and k >= 0", n);
  return v_k_from(n, terms<Rational>(n, k, rpow));
}

double lower_bound_fixedpoint(int n, int k) {
  const double e = e_k_fixed_points(n, k);
  const double v = v_k_fixed_points(n, k);
  if (!(e > 0.0)) throw std::domain_error("lower bound needs E_k > 0");
  const double lb = 1.0 - 4.0 * v / (e * e) - 2.0 / e;
  return std::clamp(lb, 0.0, 1.0);
}

double cutoff_time(int n) {
  require(n >= 4, "cutoff_time needs n >= 4", n);
  return (n - 1.5) * std::log(static_cast<double>(n));
}

BoundPoint closed_form_point(int n, int k) {
  BoundPoint b;
  b.k = k;
  b.ub_spectral = std::numeric_limits<double>::quiet_NaN();
  b.ub_envelope = upper_bound_envelope(n, k);
  b.e_k = e_k_fixed_points(n, k);
  b.v_k = v_k_fixed_points(n, k);
  b.lb_fixedpoint = lower_bound_fixedpoint(n, k);
  return b;
}

}  // namespace tt2
