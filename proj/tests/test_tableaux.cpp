#include <doctest.h>

#include <set>

#include "tt2/perm.hpp"
#include "tt2/tableaux.hpp"

using namespace tt2;

namespace {

// Partitions of n with every part <= max_part, by the standard recurrence.
std::uint64_t partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  std::uint64_t total = partition_count(n, max_part - 1);
  if (max_part <= n) total += partition_count(n - max_part, max_part);
  return total;
}

}  // namespace

TEST_CASE("partitions of 4 in canonical order") {
  const auto p = partitions(4);
  REQUIRE(p.size() == 5);
  CHECK(p[0] == Partition({4}));
  CHECK(p[1] == Partition({3, 1}));
  CHECK(p[2] == Partition({2, 2}));
  CHECK(p[3] == Partition({2, 1, 1}));
  CHECK(p[4] == Partition({1, 1, 1, 1}));
  CHECK(partitions(1) == std::vector<Partition>{Partition({1})});
}

TEST_CASE("partition counts match the recurrence") {
  for (int n = 1; n <= 14; ++n) CHECK(partitions(n).size() == partition_count(n, n));
  CHECK(partitions(10).size() == 42);
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  CHECK(Partition({2, 2}).is_self_conjugate());
  CHECK(!Partition({3, 1}).is_self_conjugate());
  for (const auto& lambda : partitions(8)) CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("standard tableaux and dimensions") {
  CHECK(enumerate_syt(Partition({3, 1})).size() == 3);
  CHECK(enumerate_syt(Partition({6})).size() == 1);
  CHECK(dimension(Partition({3, 1})) == 3);
  for (int n = 4; n <= 10; ++n) {
    CHECK(dimension(Partition({n})) == 1);
    CHECK(dimension(Partition({n - 1, 1})) == static_cast<std::uint64_t>(n - 1));
  }
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t squares = 0;
    for (const auto& lambda : partitions(n)) {
      const auto tableaux = enumerate_syt(lambda);
      CHECK(tableaux.size() == dimension(lambda));
      squares += tableaux.size() * tableaux.size();
    }
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("tableau validation") {
  const Partition shape({2, 1});
  CHECK_NOTHROW(Tableau(shape, {{0, 0}, {0, 1}, {1, 0}}));
  CHECK_THROWS(Tableau(shape, {{0, 1}, {0, 0}, {1, 0}}));
  CHECK_THROWS(Tableau(shape, {{0, 0}, {0, 1}, {0, 1}}));
  CHECK_THROWS(Tableau(shape, {{0, 0}, {0, 1}}));
  const Tableau t(Partition({2, 2}), {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(t.to_string() == "1 2/3 4");
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
}

TEST_CASE("content vectors") {
  CHECK(contents(row_reading_tableau(Partition({4}))) == ContentVector{0, 1, 2, 3});
  CHECK(contents(row_reading_tableau(Partition({1, 1, 1, 1}))) == ContentVector{0, -1, -2, -3});
  CHECK(contents(row_reading_tableau(Partition({2, 2}))) == ContentVector{0, 1, -1, 0});
  for (const auto& lambda : partitions(6))
    for (const auto& t : enumerate_syt(lambda)) {
      const auto a = contents(t);
      CHECK(a[0] == 0);
      CHECK((a[1] == 1 || a[1] == -1));
    }
}

TEST_CASE("upper standard tableaux") {
  CHECK(upper_standard(row_reading_tableau(Partition({5}))));
  CHECK(!upper_standard(row_reading_tableau(Partition({1, 1, 1, 1, 1}))));
  for (int n = 4; n <= 8; ++n) {
    std::uint64_t all = 0;
    std::uint64_t upper = 0;
    for (const auto& lambda : partitions(n)) {
      std::uint64_t shape_upper = 0;
      const auto tableaux = enumerate_syt(lambda);
      for (const auto& t : tableaux) shape_upper += upper_standard(t);
      all += tableaux.size();
      upper += shape_upper;
      if (lambda.is_self_conjugate()) CHECK(2 * shape_upper == tableaux.size());
      // Transposing swaps upper and lower tableaux between conjugate shapes.
      std::uint64_t conj_lower = 0;
      for (const auto& t : enumerate_syt(conjugate(lambda))) conj_lower += !upper_standard(t);
      CHECK(conj_lower == shape_upper);
    }
    CHECK(2 * upper == all);
  }
}
