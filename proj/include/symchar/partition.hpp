#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/bigint.hpp"

namespace symchar {

/// Error raised when two sequences that must have equal weight do not.
class WeightMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Error raised by the partition text parser.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finitely supported integer sequence (g_1, g_2, ...), conceptually
/// zero-extended. Stored without trailing zeros so that equality and hashing
/// act on the canonical form. Indices in the public API are 1-based.
class IntSeq {
 public:
  IntSeq() = default;
  IntSeq(std::initializer_list<int> entries);
  explicit IntSeq(std::vector<int> entries);

  /// Entry at 1-based index i; zero beyond the stored range.
  int operator[](std::size_t i) const noexcept {
    return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0;
  }

  /// Largest index holding a nonzero entry (0 for the zero sequence).
  std::size_t length() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Entries 1..l, padded with zeros. Requires l >= length().
  std::vector<int> padded(std::size_t l) const;

  IntSeq& operator+=(const IntSeq& other);
  IntSeq& operator-=(const IntSeq& other);
  friend IntSeq operator+(IntSeq a, const IntSeq& b) { return a += b; }
  friend IntSeq operator-(IntSeq a, const IntSeq& b) { return a -= b; }

  friend bool operator==(const IntSeq&, const IntSeq&) = default;
  /// Lexicographic on entries; used only for ordered containers.
  friend auto operator<=>(const IntSeq& a, const IntSeq& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  void canonicalize();
  std::vector<int> entries_;
};

/// Sum of entries (may be negative for general sequences).
long weight(const IntSeq& seq) noexcept;

/// True iff all entries are nonnegative (membership in the nonnegative cone).
bool is_nonnegative(const IntSeq& seq) noexcept;

/// True iff entries are weakly decreasing and nonnegative.
bool is_partition(const IntSeq& seq) noexcept;

IntSeq add_eps(const IntSeq& seq, std::size_t i);
IntSeq sub_eps(const IntSeq& seq, std::size_t i);

/// The sequence (1, 1, ..., 1) of length l.
IntSeq ones(std::size_t l);
/// The sequence (1, 2, ..., l).
IntSeq identity_seq(std::size_t l);

/// A weakly decreasing nonnegative IntSeq. Doubles as a cycle type.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless `seq` is a partition.
  explicit Partition(IntSeq seq);

  /// Sorts the entries of a nonnegative sequence into a partition.
  static Partition sorted(const IntSeq& seq);

  const IntSeq& seq() const noexcept { return seq_; }
  operator const IntSeq&() const noexcept { return seq_; }

  int operator[](std::size_t i) const noexcept { return seq_[i]; }
  std::size_t length() const noexcept { return seq_.length(); }
  std::span<const int> parts() const noexcept { return seq_.entries(); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return seq_.is_zero(); }
  /// Last nonzero part; requires a nonzero partition.
  int last() const { return seq_[seq_.length()]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.seq_ == b.seq_;
  }

 private:
  IntSeq seq_;
  int weight_ = 0;
};

/// Reverse-lexicographic comparison: delta < beta iff at the first index k
/// where they differ, delta_k > beta_k. Throws WeightMismatch on unequal
/// weights.
std::strong_ordering revlex_cmp(const Partition& delta, const Partition& beta);

/// All partitions of n in ascending reverse-lex order, starting with (n).
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n.
std::size_t partition_count(int n);

/// mu_j = number of parts equal to part j, for j = 1..length.
std::vector<int> multiplicity_vector(const Partition& p);

using Cycle = std::vector<int>;

/// The canonical representative: consecutive blocks of 1..n carry cycles
/// of lengths beta_1, beta_2, ...
std::vector<Cycle> sigma_beta(const Partition& beta);

struct ClassInfo {
  Partition cycle_type;
  BigInt centralizer_order;
  BigInt class_size;
};

ClassInfo class_info(const Partition& beta);

BigInt factorial(int n);

/// "3,1,1" style text; the empty partition is "".
std::string to_string(const IntSeq& seq);
inline std::string to_string(const Partition& p) { return to_string(p.seq()); }

/// Parses comma-separated positive parts in weakly decreasing order.
/// Throws ParseError naming the offending text otherwise.
Partition parse_partition(std::string_view text);

struct IntSeqHash {
  std::size_t operator()(const IntSeq& seq) const noexcept;
  std::size_t operator()(const Partition& p) const noexcept {
    return (*this)(p.seq());
  }
};

}  // namespace symchar
