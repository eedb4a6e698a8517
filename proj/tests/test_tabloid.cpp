#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symchar/tabloid.hpp"

using namespace symchar;

namespace {

std::vector<Cycle> identity(int n) {
  std::vector<Cycle> cycles;
  for (int p = 1; p <= n; ++p) cycles.push_back({p});
  return cycles;
}

oracle::Parts parts_of(const IntSeq& s) {
  return {s.entries().begin(), s.entries().end()};
}

// Relabels sigma's points by a random permutation of 1..n.
std::vector<Cycle> random_conjugate(const std::vector<Cycle>& sigma, int n,
                                    std::mt19937& rng) {
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 1);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Cycle> out;
  for (const auto& c : sigma) {
    Cycle moved;
    for (int p : c) moved.push_back(relabel[p - 1]);
    out.push_back(std::move(moved));
  }
  return out;
}

}  // namespace

TEST_CASE("count_fixed_tabloids examples") {
  CHECK(count_fixed_tabloids(IntSeq{2, 1}, identity(3)) == 3);
  CHECK(count_fixed_tabloids(IntSeq{2, 1}, {{1, 2}, {3}}) == 1);
  CHECK(count_fixed_tabloids(IntSeq{2, 1}, {{1, 2, 3}}) == 0);
  CHECK(count_fixed_tabloids(IntSeq{}, {}) == 1);
  CHECK(count_fixed_tabloids(IntSeq{3, -1}, identity(2)) == 0);
  CHECK_THROWS_AS(count_fixed_tabloids(IntSeq{2, 1}, identity(4)),
                  WeightMismatch);
}

TEST_CASE("tabloid enumeration and pointwise action") {
  int count = 0;
  for_each_tabloid(IntSeq{2, 1}, [&](const Tabloid& t) {
    ++count;
    CHECK(t.blocks.size() == 2);
    CHECK(t.blocks[0].size() == 2);
  });
  CHECK(count == 3);

  // ({1,2},{3}) is the only (2,1)-tabloid fixed by (1 2).
  const std::vector<Cycle> swap12{{1, 2}, {3}};
  int fixed = 0;
  for_each_tabloid(IntSeq{2, 1}, [&](const Tabloid& t) {
    if (apply(swap12, t) == t) {
      ++fixed;
      CHECK(t.blocks[0] == std::vector<int>{1, 2});
    }
  });
  CHECK(fixed == 1);
}

TEST_CASE("pruned count equals the pointwise fixed-point count") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& alpha : partitions_of(n))
      for (const auto& beta : partitions_of(n)) {
        const auto sigma = sigma_beta(beta);
        int pointwise = 0;
        for_each_tabloid(alpha, [&](const Tabloid& t) {
          if (apply(sigma, t) == t) ++pointwise;
        });
        CHECK(count_fixed_tabloids(alpha, sigma) == pointwise);
        CHECK(pointwise == oracle::fixed_tabloids(parts_of(alpha),
                                                  oracle::canonical_perm(
                                                      parts_of(beta))));
      }
}

TEST_CASE("xi examples") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& beta : partitions_of(n))
      CHECK(xi(IntSeq{n}, beta) == 1);
  CHECK(xi(IntSeq{2, 1}, {1, 1, 1}) == 3);
  // Unsorted nonnegative indices are tabloid counts too: xi^(1,2) = xi^(2,1).
  CHECK(xi(IntSeq{1, 2}, {2, 1}) == 1);
  CHECK(xi(IntSeq{2, 0, 1}, {2, 1}) == 1);
  CHECK(xi(IntSeq{2, 2}, {2, 1, 1}) == 2);
  CHECK(xi(IntSeq{3, -1}, {2}) == 0);
  CHECK(xi(IntSeq{2, 1}, {2}) == 0);
  CHECK(xi(IntSeq{}, Partition{}) == 1);
}

TEST_CASE("xi equals count_fixed_tabloids for n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : partitions_of(n))
      for (const auto& beta : partitions_of(n))
        CHECK(xi(alpha, beta) == count_fixed_tabloids(alpha, sigma_beta(beta)));
}

TEST_CASE("xi on unsorted and zero-padded indices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<int> v(4);
    for (int& x : v) x = entry(rng);
    const IntSeq alpha(v);
    const int n = static_cast<int>(weight(alpha));
    if (n > 7) continue;
    for (const auto& beta : partitions_of(n))
      CHECK(xi(alpha, beta) == oracle::fixed_tabloids(
                                   v, oracle::canonical_perm(parts_of(beta))));
  }
}

TEST_CASE("xi is constant on conjugacy classes") {
  std::mt19937 rng(17);
  for (int n = 1; n <= 7; ++n)
    for (const auto& alpha : partitions_of(n))
      for (const auto& beta : partitions_of(n)) {
        const auto sigma = sigma_beta(beta);
        const BigInt a = count_fixed_tabloids(alpha, random_conjugate(sigma, n, rng));
        const BigInt b = count_fixed_tabloids(alpha, random_conjugate(sigma, n, rng));
        CHECK(a == b);
        CHECK(a == xi(alpha, beta));
      }
}

TEST_CASE("xi at the identity is a multinomial") {
  for (int n = 1; n <= 10; ++n) {
    const Partition ones_n(IntSeq(std::vector<int>(n, 1)));
    for (const auto& alpha : partitions_of(n)) {
      BigInt multinomial = factorial(n);
      for (int a : alpha.parts()) multinomial /= factorial(a);
      CHECK(xi(alpha, ones_n) == multinomial);
    }
  }
}

TEST_CASE("permutation reciprocity over general nonnegative alpha") {
  // The identity holds for every alpha in Gamma_l, not only partitions.
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> v(3);
    for (int& x : v) x = entry(rng);
    const IntSeq alpha(v);
    const long n = weight(alpha);
    if (n < 1 || n > 8) continue;
    for (const auto& beta : partitions_of(static_cast<int>(n) - 1)) {
      BigInt lhs = 0;
      for (std::size_t i = 1; i <= 3; ++i)
        lhs += (alpha[i] - 1) * xi(sub_eps(alpha, i), beta);
      BigInt rhs = 0;
      for (std::size_t j = 1; j <= beta.length(); ++j)
        rhs += beta[j] * xi(alpha, Partition::sorted(add_eps(beta, j)));
      CHECK(lhs == rhs);
    }
  }
}
