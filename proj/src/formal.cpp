#include "symchar/formal.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "symchar/tabloid.hpp"

namespace symchar {

namespace {

template <class Sum>
void require_span(const Sum& s, std::size_t l, const char* op) {
  for (const auto& [index, c] : s.terms())
    if (index.length() > l)
      throw std::invalid_argument(std::string(op) + ": basis index (" +
                                  to_string(index) + ") has length " +
                                  std::to_string(index.length()) + " > " +
                                  std::to_string(l));
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

BigInt pairing(const FormalSumA& a, const FormalSumB& b) {
  BigInt total = 0;
  for (const auto& [delta, cb] : b.terms()) {
    const Partition cycle_type = Partition::sorted(delta);
    for (const auto& [gamma, ca] : a.terms()) {
      if (weight(gamma) != cycle_type.weight()) continue;
      total += ca * cb * xi(gamma, cycle_type);
    }
  }
  return total;
}

FormalSumA delta_minus(std::size_t l, const FormalSumA& a) {
  require_span(a, l, "delta_minus");
  FormalSumA out;
  for (const auto& [alpha, c] : a.terms())
    for (std::size_t i = 1; i <= l; ++i)
      out.add(sub_eps(alpha, i), c * (alpha[i] - 1));
  return out;
}

FormalSumB delta_plus(std::size_t m, const FormalSumB& b) {
  require_span(b, m, "delta_plus");
  FormalSumB out;
  for (const auto& [beta, c] : b.terms())
    for (std::size_t j = 1; j <= m; ++j)
      out.add(add_eps(beta, j), c * beta[j]);
  return out;
}

FormalSumA det_op(std::size_t l, const FormalSumA& a) {
  require_span(a, l, "det_op");
  std::vector<int> perm(l);
  FormalSumA out;
  for (const auto& [alpha, c] : a.terms()) {
    const std::vector<int> base = alpha.padded(l);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<int> index(base);
      for (std::size_t k = 0; k < l; ++k) index[k] += perm[k] - 1;
      out.add(IntSeq(std::move(index)), c * permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

BigInt chi(const IntSeq& alpha, const Partition& beta,
           std::optional<std::size_t> l) {
  if (weight(alpha) != beta.weight())
    throw WeightMismatch("chi: weight of (" + to_string(alpha) + ") is " +
                         std::to_string(weight(alpha)) + " but (" +
                         to_string(beta) + ") has weight " +
                         std::to_string(beta.weight()));
  const std::size_t len = l.value_or(alpha.length());
  if (len < alpha.length())
    throw std::invalid_argument("chi: l = " + std::to_string(len) +
                                " is below the length of (" +
                                to_string(alpha) + ")");
  const IntSeq shifted = alpha - identity_seq(len) + ones(len);
  return pairing(det_op(len, FormalSumA(shifted)), FormalSumB(beta.seq()));
}

std::optional<Straightened> straighten(const IntSeq& gamma) {
  // The swap permutes the values gamma_k - k; a window of length
  // length + (largest negative magnitude) + 1 covers every collision with
  // the zero tail.
  int deficit = 0;
  for (int x : gamma.entries()) deficit = std::max(deficit, -x);
  std::vector<int> g = gamma.padded(gamma.length() + deficit + 1);
  int sign = 1;
  while (true) {
    std::size_t i = 0;
    while (i + 1 < g.size() && g[i] >= g[i + 1]) ++i;
    if (i + 1 == g.size()) break;
    if (g[i + 1] == g[i] + 1) return std::nullopt;
    const int left = g[i + 1] - 1;
    const int right = g[i] + 1;
    g[i] = left;
    g[i + 1] = right;
    sign = -sign;
  }
  IntSeq result(std::move(g));
  if (!is_nonnegative(result)) return std::nullopt;
  return Straightened{sign, Partition(std::move(result))};
}

}  // namespace symchar
