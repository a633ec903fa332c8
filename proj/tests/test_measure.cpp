#include <doctest.h>

#include <deque>
#include <set>

#include "tt2/measure.hpp"

using namespace tt2;

TEST_CASE("atom counts and masses") {
  const MeasureSpec m4 = build_measure(4);
  CHECK(m4.atoms().size() == 5);
  CHECK(m4.denominator() == 5);
  for (const auto& a : m4.atoms()) CHECK(prob(m4, a.perm) == Rational(1, 5));

  const MeasureSpec m10 = build_measure(10);
  CHECK(m10.atoms().size() == 17);
  Rational total = 0;
  for (const auto& a : m10.atoms()) total += prob(m10, a.perm);
  CHECK(total == 1);
  CHECK_THROWS_AS(build_measure(2), std::invalid_argument);
}

TEST_CASE("atom order and values") {
  const int n = 6;
  const MeasureSpec m = build_measure(n);
  CHECK(m.atoms()[0].perm.is_identity());
  CHECK(m.atoms()[1].perm == Perm::cycle(n, {1, n - 1, n}));
  CHECK(m.atoms()[2].perm == Perm::cycle(n, {1, n, n - 1}));
  const auto gens = shuffle_generators(n);
  REQUIRE(gens.size() == 2 * n - 4);
  for (std::size_t i = 0; i < gens.size(); ++i) CHECK(gens[i] == m.atoms()[i + 1].perm);
}

TEST_CASE("prob off the support") {
  const MeasureSpec m = build_measure(5);
  CHECK(prob(m, Perm::identity(5)) == Rational(1, 7));
  CHECK(prob(m, Perm::cycle(5, {1, 5, 4})) == Rational(1, 7));
  CHECK(prob(m, Perm::transposition(5, 1, 2)) == 0);
  CHECK(prob(m, Perm::cycle(5, {1, 2, 3})) == 0);
  CHECK_THROWS_AS(prob(m, Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("support is symmetric, distinct and even") {
  for (int n = 3; n <= 9; ++n) {
    const MeasureSpec m = build_measure(n);
    std::set<Perm> seen;
    for (const auto& a : m.atoms()) {
      CHECK(a.perm.is_even());
      CHECK(seen.insert(a.perm).second);
      CHECK(prob(m, a.perm.inverse()) == prob(m, a.perm));
    }
  }
}

TEST_CASE("support generates the alternating group") {
  for (int n : {4, 5, 6}) {
    const MeasureSpec m = build_measure(n);
    std::set<Perm> reached{Perm::identity(n)};
    std::deque<Perm> frontier{Perm::identity(n)};
    while (!frontier.empty()) {
      const Perm x = frontier.front();
      frontier.pop_front();
      for (const auto& a : m.atoms()) {
        Perm y = x * a.perm;
        if (reached.insert(y).second) frontier.push_back(std::move(y));
      }
    }
    CHECK(reached.size() == factorial(n) / 2);
  }
}
