#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "symchar/bigint.hpp"
#include "symchar/partition.hpp"

namespace symchar {

namespace detail {
struct AnyIndex {
  static void check(const IntSeq&) {}
};
struct NonnegativeIndex {
  static void check(const IntSeq& index) {
    if (!is_nonnegative(index))
      throw std::invalid_argument("x_(" + to_string(index) +
                                  ") has a negative entry");
  }
};
}  // namespace detail

/// Finite integer combination of basis symbols indexed by IntSeq. Zero
/// coefficients are never stored.
template <class IndexPolicy>
class FormalSum {
 public:
  using Terms = std::map<IntSeq, BigInt>;

  FormalSum() = default;
  explicit FormalSum(const IntSeq& index, BigInt coeff = 1) {
    add(index, std::move(coeff));
  }

  void add(const IntSeq& index, const BigInt& coeff) {
    IndexPolicy::check(index);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(const IntSeq& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Every basis index has length at most l.
  bool in_span(std::size_t l) const {
    for (const auto& [index, c] : terms_)
      if (index.length() > l) return false;
    return true;
  }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [index, c] : other.terms_) add(index, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& other) {
    for (const auto& [index, c] : other.terms_) add(index, -c);
    return *this;
  }
  FormalSum& operator*=(const BigInt& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [index, c] : terms_) c *= k;
    }
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const BigInt& k, FormalSum a) { return a *= k; }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

/// Combinations of x^gamma, gamma any finitely supported integer sequence.
using FormalSumA = FormalSum<detail::AnyIndex>;
/// Combinations of x_beta, beta nonnegative (not necessarily sorted).
using FormalSumB = FormalSum<detail::NonnegativeIndex>;

/// Bilinear extension of (x^gamma, x_delta) = xi^gamma at the cycle type of
/// delta (delta sorted into a partition first). Zero on unequal weights.
BigInt pairing(const FormalSumA& a, const FormalSumB& b);

/// x^alpha -> sum_{i<=l} (alpha_i - 1) x^{alpha - e_i}. Throws
/// std::invalid_argument if some index of `a` has length > l.
FormalSumA delta_minus(std::size_t l, const FormalSumA& a);

/// x_beta -> sum_{j<=m} beta_j x_{beta + e_j}.
FormalSumB delta_plus(std::size_t m, const FormalSumB& b);

/// x^alpha -> sum over sigma in S_l of sgn(sigma) x^{alpha + sigma - 1_l},
/// where sigma is read as the sequence (sigma(1), ..., sigma(l)).
/// Enumerates all l! permutations.
FormalSumA det_op(std::size_t l, const FormalSumA& a);

/// Determinantal character chi^alpha at beta, evaluated as
/// (D_l(x^{alpha - id_l + 1_l}), x_beta). When `l` is omitted the length of
/// alpha is used; any l >= length gives the same value.
BigInt chi(const IntSeq& alpha, const Partition& beta,
           std::optional<std::size_t> l = std::nullopt);

struct Straightened {
  int sign;
  Partition shape;
};

/// Applies gamma -> (..., gamma_{i+1} - 1, gamma_i + 1, ...) at ascents until
/// the sequence is a partition; each step flips the sign of chi. Empty when a
/// step maps gamma to itself or the result stays negative, where chi vanishes.
std::optional<Straightened> straighten(const IntSeq& gamma);

}  // namespace symchar
