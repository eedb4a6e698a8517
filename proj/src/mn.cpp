#include "symchar/mn.hpp"

#include <string>

namespace symchar {

std::vector<RimHookRemoval> rim_hooks(const Partition& alpha, int r) {
  if (r < 1) throw std::invalid_argument("rim_hooks: r must be >= 1");
  std::vector<int> rows(alpha.parts().begin(), alpha.parts().end());
  const int height = static_cast<int>(rows.size());
  std::vector<RimHookRemoval> out;

  // A strip starts at the last cell of row `top` and walks the rim down and
  // left. It ends at the bottom row `bottom` of that rim segment, in column
  // `col`, which is the first column of `top`'s hook.
  for (int top = 0; top < height; ++top) {
    for (int col = 0; col < rows[top]; ++col) {
      int bottom = top;
      while (bottom + 1 < height && rows[bottom + 1] > col) ++bottom;
      const int arm = rows[top] - col - 1;
      const int leg = bottom - top;
      if (arm + leg + 1 != r) continue;
      std::vector<int> left(rows);
      for (int k = top; k < bottom; ++k) left[k] = rows[k + 1] - 1;
      left[bottom] = col;
      out.push_back(
          {alpha, r, Partition(IntSeq(std::move(left))), leg});
    }
  }
  return out;
}

BigInt MnOracle::value(const Partition& alpha, const Partition& beta) {
  if (alpha.weight() != beta.weight())
    throw WeightMismatch("mn_zeta: (" + to_string(alpha) + ") and (" +
                         to_string(beta) + ") have different weights");
  return expand(alpha, beta);
}

BigInt MnOracle::expand(const Partition& alpha, const Partition& beta) {
  if (beta.empty()) return 1;
  Key key{alpha.seq(), beta.seq()};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  ++evaluations_;

  const std::size_t pick =
      strip_ == Strip::kLargestPart ? 1 : beta.length();
  const int r = beta[pick];
  std::vector<int> rest(beta.parts().begin(), beta.parts().end());
  rest.erase(rest.begin() + static_cast<long>(pick - 1));
  const Partition remaining{IntSeq(std::move(rest))};

  BigInt total = 0;
  for (const auto& hook : rim_hooks(alpha, r)) {
    BigInt v = expand(hook.result, remaining);
    if (hook.leg_length % 2 == 0)
      total += v;
    else
      total -= v;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt mn_zeta(const Partition& alpha, const Partition& beta) {
  MnOracle oracle;
  return oracle.value(alpha, beta);
}

CharTable mn_table(int n, std::uint64_t* evaluations) {
  PartitionIndex index(n);
  MnOracle oracle;
  std::vector<BigInt> values;
  values.reserve(index.size() * index.size());
  for (const auto& alpha : index.order())
    for (const auto& beta : index.order())
      values.push_back(oracle.value(alpha, beta));
  if (evaluations) *evaluations = oracle.evaluations();
  return CharTable(std::move(index), std::move(values));
}

}  // namespace symchar
