#include <doctest.h>

#include <cmath>

#include "tt2/bounds.hpp"
#include "tt2/perm.hpp"
#include "tt2/walk.hpp"

using namespace tt2;

TEST_CASE("cutoff time") {
  CHECK(cutoff_time(10) == doctest::Approx(8.5 * std::log(10.0)).epsilon(1e-15));
  CHECK(cutoff_time(10) == doctest::Approx(19.572).epsilon(1e-4));
  CHECK(cutoff_time(4) == doctest::Approx(3.466).epsilon(1e-3));
  for (int n = 4; n < 60; ++n) CHECK(cutoff_time(n) < cutoff_time(n + 1));
}

TEST_CASE("spectral bound at n=4") {
  const double r3 = 0.6, r1 = 0.2;
  const double expected =
      0.5 * std::sqrt(3 * std::pow(r3, 12) + 3 * std::pow(r1, 12) + 5 * std::pow(r1, 12));
  CHECK(upper_bound_spectral(4, 6) == doctest::Approx(expected).epsilon(1e-12));
  const SpectralBound b(8);
  for (int k = 1; k < 100; ++k) CHECK(b(k) < b(k - 1));
  CHECK(b(400) < 1e-12);
}

TEST_CASE("envelope") {
  const int n = 30;
  const int k = static_cast<int>(std::lround((n - 1.5) * (std::log(n) + 2)));
  CHECK(upper_bound_envelope(n, k) <= std::exp(-2.0) / std::sqrt(2.0) + 0.01);
  // Dominated by n^2 e^{-2k/(n-1.5)} at n=10, k=60.
  const double x = 100 * std::exp(-120 / 8.5);
  CHECK(upper_bound_envelope(10, 60) == doctest::Approx(0.5 * std::sqrt(std::expm1(x))).epsilon(1e-9));
  CHECK(upper_bound_envelope(10, 80) < 1e-3);
  CHECK(std::isinf(upper_bound_envelope(60, 0)));
  for (int m = 5; m <= 8; ++m) {
    const SpectralBound b(m);
    for (int j = static_cast<int>(std::ceil(cutoff_time(m))); j <= 80; ++j)
      CHECK(b(j) <= upper_bound_envelope(m, j) + 1e-9);
  }
}

TEST_CASE("fixed-point expectation") {
  for (int n = 4; n <= 20; ++n) {
    CHECK(e_k_fixed_points(n, 0) == n);
    CHECK(e_k_fixed_points_exact(n, 0) == n);
    CHECK(e_k_fixed_points(n, 2000) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(e_k_fixed_points_exact(6, 1) == Rational(30, 9));
  CHECK_THROWS(e_k_fixed_points(3, 1));
  CHECK_THROWS(e_k_fixed_points(6, -1));
}

TEST_CASE("fixed-point variance") {
  for (int n = 5; n <= 20; ++n) {
    CHECK(v_k_fixed_points_exact(n, 0) == 0);
    CHECK(std::abs(v_k_fixed_points(n, 0)) < 1e-12);
    CHECK(v_k_fixed_points(n, 3000) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Uniform law on A_6 by enumeration: mean 1, variance 1.
  Rational s1 = 0, s2 = 0;
  for (std::uint64_t r = 0; r < factorial(6); ++r) {
    const Perm p = unrank(PermRank{r}, 6);
    if (!p.is_even()) continue;
    s1 += fixed_points(p);
    s2 += fixed_points(p) * fixed_points(p);
  }
  CHECK(s1 / 360 == 1);
  CHECK(s2 / 360 - (s1 / 360) * (s1 / 360) == 1);
  for (int k = 0; k <= 20; ++k) {
    CHECK(e_k_fixed_points(7, k) == doctest::Approx(e_k_fixed_points_exact(7, k).convert_to<double>()));
    CHECK(std::abs(v_k_fixed_points(7, k) - v_k_fixed_points_exact(7, k).convert_to<double>()) < 1e-12);
  }
}

TEST_CASE("fixed-point lower bound") {
  for (int n = 5; n <= 30; ++n)
    for (int k = 0; k <= 200; ++k) {
      const double lb = lower_bound_fixedpoint(n, k);
      CHECK(lb >= 0.0);
      CHECK(lb <= 1.0);
    }
  CHECK(lower_bound_fixedpoint(10, 500) == 0.0);
  // Deep pre-cutoff, c = -4: the bound approaches 1 - 6/(1 + e^4).
  const int n = 400;
  const int k = static_cast<int>((n - 1.5) * (std::log(n) - 4));
  CHECK(lower_bound_fixedpoint(n, k) >= 1 - 6 / (1 + std::exp(4.0)) - 0.05);
}

TEST_CASE("bounds sandwich the exact distance") {
  for (int n : {5, 6}) {
    const SpectralBound ub(n);
    const auto tv = tv_curve(n, 60, Mode::float64, ActionTable::build(n));
    for (int k = 0; k <= 60; ++k) {
      CHECK(lower_bound_fixedpoint(n, k) <= tv[static_cast<std::size_t>(k)] + 1e-9);
      CHECK(tv[static_cast<std::size_t>(k)] <= ub(k) + 1e-9);
    }
  }
}

TEST_CASE("closed-form point") {
  const BoundPoint p = closed_form_point(8, 12);
  CHECK(std::isnan(p.ub_spectral));
  CHECK(p.k == 12);
  CHECK(p.e_k == e_k_fixed_points(8, 12));
  CHECK(p.v_k == v_k_fixed_points(8, 12));
  CHECK(p.lb_fixedpoint == lower_bound_fixedpoint(8, 12));
  CHECK(p.ub_envelope == upper_bound_envelope(8, 12));
}
