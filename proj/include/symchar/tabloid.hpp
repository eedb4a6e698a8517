#pragma once

#include <functional>
#include <vector>

#include "symchar/bigint.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Blocks t_1, t_2, ... of {1..n}, pairwise disjoint, |t_i| = alpha_i.
/// Points inside a block are kept sorted.
struct Tabloid {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

/// Calls `visit` for every alpha-tabloid of {1..|alpha|}. Visits nothing when
/// alpha has a negative entry. Exponential; small n only.
void for_each_tabloid(const IntSeq& alpha,
                      const std::function<void(const Tabloid&)>& visit);

/// Applies a permutation given in disjoint cycle form to every block.
Tabloid apply(const std::vector<Cycle>& sigma, const Tabloid& t);

/// Number of alpha-tabloids fixed by sigma, by explicit enumeration of
/// point-to-block assignments. A branch is cut as soon as a cycle is split
/// across two blocks (sigma fixes t iff every cycle lies inside one block).
/// Throws WeightMismatch when |alpha| differs from the degree of sigma.
BigInt count_fixed_tabloids(const IntSeq& alpha,
                            const std::vector<Cycle>& sigma);

/// Permutation character value xi^alpha at the class beta.
///
/// Zero when alpha has a negative entry or when the weights differ. For a
/// nonnegative alpha (sorted or not) this counts the ways to send every cycle
/// of sigma_beta to one block so that block i receives cycles of total
/// length alpha_i. Equal cycle lengths are grouped and counted with binomial
/// factors; the fill is memoized on (block, remaining multiset).
BigInt xi(const IntSeq& alpha, const Partition& beta);

}  // namespace symchar
