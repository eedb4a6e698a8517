#include "symchar/tabloid.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace symchar {

namespace {

int degree_of(const std::vector<Cycle>& sigma) {
  int n = 0;
  for (const auto& c : sigma) n += static_cast<int>(c.size());
  return n;
}

void fill_blocks(const std::vector<int>& sizes, int point, int n,
                 std::vector<int>& room, Tabloid& t,
                 const std::function<void(const Tabloid&)>& visit) {
  if (point > n) {
    visit(t);
    return;
  }
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (room[b] == 0) continue;
    --room[b];
    t.blocks[b].push_back(point);
    fill_blocks(sizes, point + 1, n, room, t, visit);
    t.blocks[b].pop_back();
    ++room[b];
  }
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

class BlockFill {
 public:
  BlockFill(std::vector<int> blocks, std::vector<int> lengths)
      : blocks_(std::move(blocks)), lengths_(std::move(lengths)) {}

  BigInt count(std::size_t block, const std::vector<int>& remaining) {
    if (block == blocks_.size()) {
      const bool used_all = std::all_of(remaining.begin(), remaining.end(),
                                        [](int c) { return c == 0; });
      return used_all ? 1 : 0;
    }
    auto key = std::make_pair(block, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt total = 0;
    std::vector<int> rest = remaining;
    choose(block, 0, blocks_[block], remaining, rest, BigInt(1), total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  // Picks how many cycles of each distinct length go into `block`.
  void choose(std::size_t block, std::size_t kind, int room,
              const std::vector<int>& remaining, std::vector<int>& rest,
              const BigInt& ways, BigInt& total) {
    if (kind == lengths_.size()) {
      if (room == 0) total += ways * count(block + 1, rest);
      return;
    }
    const int len = lengths_[kind];
    const int avail = remaining[kind];
    for (int take = 0; take <= avail && take * len <= room; ++take) {
      rest[kind] = avail - take;
      choose(block, kind + 1, room - take * len, remaining, rest,
             ways * binomial(avail, take), total);
    }
    rest[kind] = avail;
  }

  std::vector<int> blocks_;
  std::vector<int> lengths_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

}  // namespace

void for_each_tabloid(const IntSeq& alpha,
                      const std::function<void(const Tabloid&)>& visit) {
  if (!is_nonnegative(alpha)) return;
  std::vector<int> sizes(alpha.entries().begin(), alpha.entries().end());
  const int n = static_cast<int>(weight(alpha));
  std::vector<int> room = sizes;
  Tabloid t;
  t.blocks.resize(sizes.size());
  fill_blocks(sizes, 1, n, room, t, visit);
}

Tabloid apply(const std::vector<Cycle>& sigma, const Tabloid& t) {
  std::map<int, int> image;
  for (const auto& c : sigma)
    for (std::size_t k = 0; k < c.size(); ++k)
      image[c[k]] = c[(k + 1) % c.size()];
  Tabloid out;
  for (const auto& block : t.blocks) {
    std::vector<int> moved;
    for (int p : block) {
      auto it = image.find(p);
      moved.push_back(it == image.end() ? p : it->second);
    }
    std::sort(moved.begin(), moved.end());
    out.blocks.push_back(std::move(moved));
  }
  return out;
}

BigInt count_fixed_tabloids(const IntSeq& alpha,
                            const std::vector<Cycle>& sigma) {
  const int n = degree_of(sigma);
  if (weight(alpha) != n)
    throw WeightMismatch("count_fixed_tabloids: weight of (" +
                         to_string(alpha) + ") is " +
                         std::to_string(weight(alpha)) +
                         " but permutation has degree " + std::to_string(n));
  if (!is_nonnegative(alpha)) return 0;

  // cycle_of[p] = index of the cycle containing point p.
  std::vector<int> cycle_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t c = 0; c < sigma.size(); ++c)
    for (int p : sigma[c]) cycle_of[p] = static_cast<int>(c);

  std::vector<int> room(alpha.entries().begin(), alpha.entries().end());
  std::vector<int> cycle_block(sigma.size(), -1);
  std::vector<int> assigned_in_cycle(sigma.size(), 0);
  BigInt fixed = 0;

  std::function<void(int)> place = [&](int point) {
    if (point > n) {
      ++fixed;
      return;
    }
    const int c = cycle_of[point];
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] == 0) continue;
      if (cycle_block[c] != -1 && cycle_block[c] != static_cast<int>(b))
        continue;
      const int saved = cycle_block[c];
      --room[b];
      cycle_block[c] = static_cast<int>(b);
      ++assigned_in_cycle[c];
      place(point + 1);
      --assigned_in_cycle[c];
      if (assigned_in_cycle[c] == 0) cycle_block[c] = saved;
      ++room[b];
    }
  };
  place(1);
  return fixed;
}

BigInt xi(const IntSeq& alpha, const Partition& beta) {
  if (!is_nonnegative(alpha) || weight(alpha) != beta.weight()) return 0;

  std::vector<int> blocks;
  for (int a : alpha.entries())
    if (a > 0) blocks.push_back(a);
  std::sort(blocks.begin(), blocks.end(), std::greater<>{});

  std::vector<int> lengths;
  std::vector<int> counts;
  for (int part : beta.parts()) {
    if (!lengths.empty() && lengths.back() == part) {
      ++counts.back();
    } else {
      lengths.push_back(part);
      counts.push_back(1);
    }
  }
  BlockFill fill(std::move(blocks), std::move(lengths));
  return fill.count(0, counts);
}

}  // namespace symchar
