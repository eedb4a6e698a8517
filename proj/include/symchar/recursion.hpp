#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "symchar/bigint.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// A case-(ii) bracket was not divisible by beta_m - 1. The recursion
/// guarantees integrality, so this always indicates a bug or corrupted input.
class DivisibilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A value required by the recursion had not been computed yet.
class MissingDependency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Partitions of n in ascending reverse-lex order with O(1) lookup.
class PartitionIndex {
 public:
  explicit PartitionIndex(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<Partition>& order() const noexcept { return order_; }
  const Partition& operator[](std::size_t i) const { return order_[i]; }

  std::optional<std::size_t> find(const IntSeq& p) const;
  /// Throws std::invalid_argument if `p` is not a partition of n.
  std::size_t at(const IntSeq& p) const;

 private:
  int n_;
  std::vector<Partition> order_;
  std::unordered_map<IntSeq, std::size_t, IntSeqHash> position_;
};

/// Exact character table of S_n. Rows are characters, columns are classes,
/// both in ascending reverse-lex order.
class CharTable {
 public:
  explicit CharTable(int n);
  CharTable(PartitionIndex index, std::vector<BigInt> values);

  int n() const noexcept { return index_.n(); }
  std::size_t size() const noexcept { return index_.size(); }
  const std::vector<Partition>& order() const noexcept {
    return index_.order();
  }
  const PartitionIndex& index() const noexcept { return index_; }

  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return values_[row * size() + col];
  }
  const BigInt& value(const Partition& alpha, const Partition& beta) const;
  std::span<const BigInt> row(std::size_t r) const {
    return {values_.data() + r * size(), size()};
  }
  void set(std::size_t row, std::size_t col, BigInt v) {
    values_[row * size() + col] = std::move(v);
  }

  friend bool operator==(const CharTable& a, const CharTable& b) {
    return a.n() == b.n() && a.values_ == b.values_;
  }

 private:
  PartitionIndex index_;
  std::vector<BigInt> values_;
};

/// Tables for S_0 ... S_n; tables[0] is [1].
struct TableStack {
  std::vector<CharTable> tables;

  int capacity() const noexcept { return static_cast<int>(tables.size()) - 1; }
  const CharTable& level(int k) const { return tables.at(k); }
};

struct BuildStats {
  std::uint64_t branching_evaluations = 0;
  std::uint64_t recursion_evaluations = 0;
  /// One per case-(ii) bracket checked for exact division.
  std::uint64_t divisibility_checks = 0;
  std::uint64_t divisibility_failures = 0;

  BuildStats& operator+=(const BuildStats& o) {
    branching_evaluations += o.branching_evaluations;
    recursion_evaluations += o.recursion_evaluations;
    divisibility_checks += o.divisibility_checks;
    divisibility_failures += o.divisibility_failures;
    return *this;
  }
};

/// One row of a level under construction; empty slots are not yet known.
using PartialRow = std::vector<std::optional<BigInt>>;

/// Case beta_m = 1 (branching): sum over descents i of alpha of
/// zeta^{alpha - e_i}_{beta - e_m}, read from the S_{n-1} table.
BigInt branching_value(const Partition& alpha, const Partition& beta,
                       const CharTable& prev);

/// Case beta_m >= 2:
///   (beta_m - 1)^{-1} [ sum_{descents i} (alpha_i - i) zeta^{alpha-e_i}_{beta-e_m}
///                       - sum_{j<m, first of its run} mu_j beta_j
///                             zeta^alpha_{beta+e_j-e_m} ]
/// with mu the multiplicities of beta - e_m. The second sum reads `partial`,
/// the row of alpha, indexed by `level`. Throws DivisibilityError on a
/// nonzero remainder and MissingDependency on an empty slot.
BigInt recursion_value(const Partition& alpha, const Partition& beta,
                       const CharTable& prev, const PartitionIndex& level,
                       std::span<const std::optional<BigInt>> partial,
                       BuildStats* stats = nullptr);

/// Single formula for both cases with kappa = 1 - [beta_m == 1]: factors
/// (alpha_i - i)^kappa, second sum scaled by kappa, divisor beta_m - kappa.
BigInt kappa_value(const Partition& alpha, const Partition& beta,
                   const CharTable& prev, const PartitionIndex& level,
                   std::span<const std::optional<BigInt>> partial);

/// zeta^alpha_beta read from a built stack. Throws WeightMismatch and
/// std::out_of_range when the weight exceeds the stack.
const BigInt& zeta(const Partition& alpha, const Partition& beta,
                   const TableStack& stack);

struct BuildOptions {
  /// Row-level OpenMP threads; 0 keeps the runtime default.
  int threads = 0;
  /// Use the per-entry reference path instead of the planned kernel.
  bool serial_reference = false;
  BuildStats* stats = nullptr;
};

/// Reference build of S_n from S_{n-1}: every entry goes through
/// branching_value / recursion_value, one row at a time.
CharTable build_level_reference(const CharTable& prev,
                                BuildStats* stats = nullptr);

/// Planned build of S_n from S_{n-1}. Dependency indices are resolved once
/// per level; alpha-rows are then independent and run under OpenMP.
CharTable build_level_parallel(const CharTable& prev, int threads = 0,
                               BuildStats* stats = nullptr);

CharTable build_level(const CharTable& prev, const BuildOptions& options = {});

/// Complete stack S_0 ... S_n.
TableStack build_table(int n, const BuildOptions& options = {});

/// Table of S_n only; at most two levels are alive at any time.
CharTable build_top_table(int n, const BuildOptions& options = {});

}  // namespace symchar
