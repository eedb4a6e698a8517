#include <doctest.h>

#include "oracles.hpp"
#include "symchar/mn.hpp"
#include "symchar/recursion.hpp"

using namespace symchar;

namespace {

// Character tables computed once with the Frobenius test oracle, rows and
// columns in ascending reverse-lex order.
const std::vector<std::vector<int>> kS3 = {{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
const std::vector<std::vector<int>> kS4 = {{1, 1, 1, 1, 1},
                                           {-1, 0, -1, 1, 3},
                                           {0, -1, 2, 0, 2},
                                           {1, 0, -1, -1, 3},
                                           {-1, 1, 1, -1, 1}};
const std::vector<std::vector<int>> kS5 = {
    {1, 1, 1, 1, 1, 1, 1},     {-1, 0, -1, 1, 0, 2, 4},
    {0, -1, 1, -1, 1, 1, 5},   {1, 0, 0, 0, -2, 0, 6},
    {0, 1, -1, -1, 1, -1, 5},  {-1, 0, 1, 1, 0, -2, 4},
    {1, -1, -1, 1, 1, -1, 1}};

void check_matches(const CharTable& t, const std::vector<std::vector<int>>& want) {
  REQUIRE(t.size() == want.size());
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t.size(); ++c) CHECK(t(r, c) == want[r][c]);
}

PartialRow known_row(const CharTable& t, std::size_t r) {
  PartialRow row;
  for (const auto& v : t.row(r)) row.emplace_back(v);
  return row;
}

}  // namespace

TEST_CASE("frozen tables") {
  const TableStack stack = build_table(5);
  CHECK(stack.capacity() == 5);
  CHECK(stack.level(0).size() == 1);
  CHECK(stack.level(0)(0, 0) == 1);
  check_matches(stack.level(2), {{1, 1}, {-1, 1}});
  check_matches(stack.level(3), kS3);
  check_matches(stack.level(4), kS4);
  check_matches(stack.level(5), kS5);
}

TEST_CASE("recursion agrees with the Frobenius formula up to S_6") {
  const TableStack stack = build_table(6);
  for (int n = 1; n <= 6; ++n) {
    const auto parts = oracle::partitions(n);
    const CharTable& t = stack.level(n);
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < t.size(); ++c)
        CHECK(t(r, c) == oracle::frobenius(parts[r], parts[c]));
  }
}

TEST_CASE("branching_value") {
  const TableStack stack = build_table(4);
  CHECK(branching_value({2, 1}, {1, 1, 1}, stack.level(2)) == 2);
  CHECK(branching_value({4}, {1, 1, 1, 1}, stack.level(3)) == 1);
  CHECK(branching_value({2, 2}, {2, 1, 1}, stack.level(3)) == 0);
  CHECK_THROWS_AS(branching_value({2, 1}, {3}, stack.level(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(branching_value({2, 1}, {1, 1, 1}, stack.level(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(branching_value({2, 1}, {1, 1}, stack.level(2)),
                  WeightMismatch);
}

TEST_CASE("recursion_value") {
  const TableStack stack = build_table(4);
  const PartitionIndex s3(3), s4(4), s2(2);
  const PartialRow empty3(s3.size());

  // (1/2)[(2-1)(-1) + (1-2)(1)] = -1; no second-sum terms at an n-cycle.
  CHECK(recursion_value({2, 1}, {3}, stack.level(2), s3, empty3) == -1);
  // Sign character at a transposition.
  CHECK(recursion_value({1, 1}, {2}, stack.level(1), s2, PartialRow(2)) == -1);

  // (2,2) at (2,2) needs zeta^(2,2)_(3,1) = -1 from the same row.
  PartialRow row(s4.size());
  row[s4.at(IntSeq{3, 1})] = BigInt(-1);
  BuildStats stats;
  CHECK(recursion_value({2, 2}, {2, 2}, stack.level(3), s4, row, &stats) == 2);
  CHECK(stats.divisibility_checks == 1);
  CHECK(stats.divisibility_failures == 0);

  CHECK_THROWS_AS(
      recursion_value({2, 2}, {2, 2}, stack.level(3), s4, PartialRow(s4.size())),
      MissingDependency);
  CHECK_THROWS_AS(recursion_value({2, 1}, {2, 1}, stack.level(2), s3, empty3),
                  std::invalid_argument);
}

TEST_CASE("corrupted dependencies trip the divisibility assertion") {
  // (3,3) at (3,3) divides by 2 and weights zeta^(3,3)_(4,2) by 3, so
  // bumping that entry by one leaves an odd bracket.
  BuildStats stats;
  const PartitionIndex s6(6);
  const TableStack six = build_table(6);
  PartialRow r6 = known_row(six.level(6), s6.at(IntSeq{3, 3}));
  const std::size_t dep = s6.at(IntSeq{4, 2});
  r6[dep] = *r6[dep] + 1;
  CHECK_THROWS_AS(recursion_value({3, 3}, {3, 3}, six.level(5), s6, r6, &stats),
                  DivisibilityError);
  CHECK(stats.divisibility_failures == 1);
  try {
    recursion_value({3, 3}, {3, 3}, six.level(5), s6, r6);
  } catch (const DivisibilityError& e) {
    const std::string what = e.what();
    CHECK(what.find("(3,3)") != std::string::npos);
  }
}

TEST_CASE("zeta") {
  const TableStack stack = build_table(6);
  CHECK(zeta(Partition{}, Partition{}, stack) == 1);
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r < n; ++r) {
      std::vector<int> hook{n - r};
      hook.insert(hook.end(), r, 1);
      CHECK(zeta(Partition(IntSeq(hook)), Partition{n}, stack) ==
            (r % 2 == 0 ? 1 : -1));
    }
  const std::vector<int> row22{0, -1, 2, 0, 2};
  const auto classes = partitions_of(4);
  for (std::size_t c = 0; c < classes.size(); ++c)
    CHECK(zeta({2, 2}, classes[c], stack) == row22[c]);
  CHECK_THROWS_AS(zeta({2}, {1}, stack), WeightMismatch);
  CHECK_THROWS_AS(zeta({7}, {7}, stack), std::out_of_range);
}

TEST_CASE("kappa_value reproduces both cases") {
  const TableStack stack = build_table(9);
  for (int n = 1; n <= 9; ++n) {
    const CharTable& t = stack.level(n);
    for (std::size_t r = 0; r < t.size(); ++r) {
      const PartialRow row = known_row(t, r);
      for (std::size_t c = 0; c < t.size(); ++c)
        CHECK(kappa_value(t.order()[r], t.order()[c], stack.level(n - 1),
                          t.index(), row) == t(r, c));
    }
  }
  const PartitionIndex s3(3);
  CHECK(kappa_value({2, 1}, {3}, stack.level(2), s3, PartialRow(3)) == -1);
}

TEST_CASE("reference and parallel builds agree") {
  BuildOptions reference;
  reference.serial_reference = true;
  BuildStats ref_stats, par_stats;
  reference.stats = &ref_stats;
  BuildOptions parallel;
  parallel.threads = 4;
  parallel.stats = &par_stats;
  const TableStack a = build_table(11, reference);
  const TableStack b = build_table(11, parallel);
  for (int n = 0; n <= 11; ++n) CHECK(a.level(n) == b.level(n));
  CHECK(ref_stats.divisibility_checks == par_stats.divisibility_checks);
  CHECK(ref_stats.recursion_evaluations == par_stats.recursion_evaluations);
  CHECK(ref_stats.branching_evaluations == par_stats.branching_evaluations);
  CHECK(build_top_table(11, parallel) == b.level(11));

  BuildOptions one_thread;
  one_thread.threads = 1;
  CHECK(build_top_table(11, one_thread) == b.level(11));
}

TEST_CASE("table shape invariants") {
  const TableStack stack = build_table(12);
  for (int n = 1; n <= 12; ++n) {
    const CharTable& t = stack.level(n);
    CHECK(t.size() == partition_count(n));
    for (std::size_t c = 0; c < t.size(); ++c) CHECK(t(0, c) == 1);
    BigInt squares = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
      const BigInt& degree = t(r, t.size() - 1);
      CHECK(degree > 0);
      squares += degree * degree;
    }
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("irreducible reciprocity") {
  const TableStack stack = build_table(9);
  for (int n = 1; n <= 9; ++n)
    for (const auto& alpha : partitions_of(n))
      for (const auto& beta : partitions_of(n - 1)) {
        BigInt lhs = 0;
        for (std::size_t i = 1; i <= alpha.length(); ++i)
          if (alpha[i] > alpha[i + 1])
            lhs += (alpha[i] - static_cast<int>(i)) *
                   zeta(Partition(sub_eps(alpha, i)), beta, stack);
        BigInt rhs = 0;
        for (std::size_t j = 1; j <= beta.length(); ++j)
          rhs += beta[j] * zeta(alpha, Partition::sorted(add_eps(beta, j)), stack);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("S_0 and S_1") {
  CHECK(build_top_table(0)(0, 0) == 1);
  const CharTable s1 = build_top_table(1);
  CHECK(s1.size() == 1);
  CHECK(s1(0, 0) == 1);
  CHECK_THROWS(build_table(-1));
}
