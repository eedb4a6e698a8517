#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "symchar/bigint.hpp"
#include "symchar/partition.hpp"
#include "symchar/recursion.hpp"

namespace symchar {

struct RimHookRemoval {
  Partition source;
  int hook_length;
  Partition result;
  int leg_length;
};

/// Every connected border strip of r cells whose removal from the diagram of
/// alpha leaves a partition. Strips are found by walking the rim from the end
/// of a row down to the bottom of a column; leg = rows touched - 1.
std::vector<RimHookRemoval> rim_hooks(const Partition& alpha, int r);

/// Murnaghan-Nakayama evaluation of character values, memoized on the
/// (alpha, remaining classes) pair. Independent of the recursion engine.
class MnOracle {
 public:
  enum class Strip { kLargestPart, kSmallestPart };

  explicit MnOracle(Strip strip = Strip::kLargestPart) : strip_(strip) {}

  /// Throws WeightMismatch on unequal weights.
  BigInt value(const Partition& alpha, const Partition& beta);

  /// Memo misses so far.
  std::uint64_t evaluations() const noexcept { return evaluations_; }

 private:
  struct Key {
    IntSeq alpha;
    IntSeq beta;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      IntSeqHash h;
      return h(k.alpha) * 31 + h(k.beta);
    }
  };

  BigInt expand(const Partition& alpha, const Partition& beta);

  Strip strip_;
  std::uint64_t evaluations_ = 0;
  std::unordered_map<Key, BigInt, KeyHash> memo_;
};

/// Single evaluation with a fresh memo.
BigInt mn_zeta(const Partition& alpha, const Partition& beta);

/// Full table of S_n from one shared memo.
CharTable mn_table(int n, std::uint64_t* evaluations = nullptr);

}  // namespace symchar
