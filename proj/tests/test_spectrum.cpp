#include <doctest.h>

#include "tt2/perm.hpp"
#include "tt2/spectrum.hpp"

using namespace tt2;

namespace {

std::uint64_t total_multiplicity(const std::vector<SpectrumEntry>& s) {
  std::uint64_t total = 0;
  for (const auto& e : s) total += e.multiplicity;
  return total;
}

}  // namespace

TEST_CASE("n=4 spectrum") {
  const auto s = spectrum_of(4);
  const auto agg = aggregate(s);
  const std::map<int, std::uint64_t> expected{{5, 1}, {3, 3}, {1, 3}, {-1, 5}};
  CHECK(agg == expected);
  for (const auto& e : s) CHECK(e.denominator == 5);
  CHECK(total_multiplicity(s) == 12);
}

TEST_CASE("n=3 spectrum") {
  // The shuffle element is 1 + (1,2,3) + (1,3,2) on A_3, with eigenvalues 3 and 0 (twice).
  const auto agg = aggregate(spectrum_of(3));
  CHECK(agg == std::map<int, std::uint64_t>{{0, 2}, {3, 1}});
  CHECK_THROWS_AS(spectrum_of(2), std::invalid_argument);
}

TEST_CASE("completeness and range") {
  for (int n = 4; n <= 12; ++n) {
    const auto s = spectrum_of(n);
    CHECK(total_multiplicity(s) == factorial(n) / 2);
    int trivial = 0;
    for (const auto& e : s) {
      CHECK(std::abs(e.numerator) <= 2 * n - 3);
      if (e.numerator == 2 * n - 3) trivial += static_cast<int>(e.multiplicity);
    }
    CHECK(trivial == 1);
  }
}

TEST_CASE("the standard representation") {
  for (int n = 6; n <= 11; ++n) {
    std::map<int, std::uint64_t> contribution;
    for (const auto& e : spectrum_of(n))
      if (e.shape == Partition({n - 1, 1}) || e.shape == conjugate(Partition({n - 1, 1})))
        contribution[e.numerator] += e.multiplicity;
    const auto un = static_cast<std::uint64_t>(n);
    CHECK(contribution[2 * n - 5] == (un - 3) * (un - 1));
    CHECK(contribution[n - 3] == un - 1);
    CHECK(contribution[-(n - 3)] == un - 1);
    CHECK(contribution.size() == 3);
  }
}

TEST_CASE("table of small shapes") {
  for (int n = 6; n <= 12; ++n) {
    const auto report = table1_check(n);
    CHECK_MESSAGE(report.ok(), report.diff());
    CHECK(report.families.size() == 4);
    for (const auto& f : report.families) {
      std::uint64_t per_copy = 0;
      for (const auto& [num, m] : f.expected) per_copy += m;
      CHECK(per_copy == f.dimension);
    }
  }
  const auto r10 = table1_check(10);
  CHECK(r10.families[1].actual == std::map<int, std::uint64_t>{{15, 7}, {7, 1}, {-7, 1}});
  CHECK(r10.families[3].actual ==
        std::map<int, std::uint64_t>{{13, 21}, {3, 1}, {5, 7}, {-5, 7}});
  CHECK(table1_check(6).families[2].dimension == 9);
  CHECK_THROWS(table1_check(5));
}

TEST_CASE("trace oracle") {
  const auto v4 = trace_moment_oracle(4, 20);
  CHECK(v4.ok());
  CHECK(v4.traces[0] == 12);
  CHECK(v4.traces[1] == 60);
  CHECK(v4.moments[1] == 60);
  CHECK(trace_moment_oracle(5, 20).ok());
  CHECK(trace_moment_oracle(6, 6).ok());
}

TEST_CASE("representative choice and threads do not change the multiset") {
  for (int n = 5; n <= 9; ++n) {
    const auto a = aggregate(spectrum_of(n, Representative::first_in_order, 1));
    CHECK(a == aggregate(spectrum_of(n, Representative::second_in_order, 1)));
    CHECK(a == aggregate(spectrum_of(n, Representative::first_in_order, 4)));
  }
}

TEST_CASE("case labels follow the content rule") {
  for (const auto& e : spectrum_of(7)) {
    const auto a = contents(enumerate_syt(e.shape)[e.tableau_index]);
    const int last = a[6];
    const int prev = a[5];
    switch (e.source) {
      case EigenCase::ascending: CHECK(e.numerator == 2 * last - 1); break;
      case EigenCase::descending: CHECK(e.numerator == -(2 * last + 1)); break;
      case EigenCase::pair_plus: CHECK(e.numerator == last + prev); break;
      case EigenCase::pair_minus: CHECK(e.numerator == -(last + prev)); break;
      case EigenCase::direct: FAIL("direct case only at n=3"); break;
    }
  }
}
