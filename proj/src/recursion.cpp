#include "symchar/recursion.hpp"

#include <exception>
#include <string>
#include <utility>

#include <omp.h>

namespace symchar {

PartitionIndex::PartitionIndex(int n) : n_(n), order_(partitions_of(n)) {
  position_.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i)
    position_.emplace(order_[i].seq(), i);
}

std::optional<std::size_t> PartitionIndex::find(const IntSeq& p) const {
  auto it = position_.find(p);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::size_t PartitionIndex::at(const IntSeq& p) const {
  if (auto i = find(p)) return *i;
  throw std::invalid_argument("(" + to_string(p) + ") is not a partition of " +
                              std::to_string(n_));
}

CharTable::CharTable(int n)
    : index_(n), values_(index_.size() * index_.size()) {}

CharTable::CharTable(PartitionIndex index, std::vector<BigInt> values)
    : index_(std::move(index)), values_(std::move(values)) {
  if (values_.size() != index_.size() * index_.size())
    throw std::invalid_argument("character table of S_" +
                                std::to_string(index_.n()) + " needs " +
                                std::to_string(index_.size() * index_.size()) +
                                " entries");
}

const BigInt& CharTable::value(const Partition& alpha,
                               const Partition& beta) const {
  return (*this)(index_.at(alpha), index_.at(beta));
}

namespace {

struct Descent {
  std::size_t i;  // 1-based
  Partition removed;
};

std::vector<Descent> descents(const Partition& alpha) {
  std::vector<Descent> out;
  for (std::size_t i = 1; i <= alpha.length(); ++i)
    if (alpha[i] > alpha[i + 1])
      out.push_back({i, Partition(sub_eps(alpha, i))});
  return out;
}

struct ShiftTerm {
  int coeff;  // mu_j * beta_j
  Partition target;  // beta + e_j - e_m
};

// j ranges over the first index of each run of equal parts among 1..m-1.
std::vector<ShiftTerm> shift_terms(const Partition& beta) {
  const std::size_t m = beta.length();
  const IntSeq lowered = sub_eps(beta, m);
  std::vector<ShiftTerm> out;
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    if (j > 1 && beta[j] == beta[j - 1]) continue;
    int mu = 0;
    for (std::size_t k = 1; k <= m; ++k)
      if (lowered[k] == beta[j]) ++mu;
    IntSeq target = add_eps(lowered, j);
    if (!is_partition(target))
      throw std::logic_error("shifted class (" + to_string(target) +
                             ") of (" + to_string(beta) +
                             ") is not weakly decreasing");
    out.push_back({mu * beta[j], Partition(std::move(target))});
  }
  return out;
}

void check_level_inputs(const char* op, const Partition& alpha,
                        const Partition& beta, const CharTable& prev) {
  if (alpha.weight() != beta.weight())
    throw WeightMismatch(std::string(op) + ": (" + to_string(alpha) +
                         ") and (" + to_string(beta) +
                         ") have different weights");
  if (beta.weight() == 0)
    throw std::invalid_argument(std::string(op) + ": needs n >= 1");
  if (prev.n() != beta.weight() - 1)
    throw std::invalid_argument(std::string(op) + ": previous table is S_" +
                                std::to_string(prev.n()) + ", expected S_" +
                                std::to_string(beta.weight() - 1));
}

const BigInt& dependency(std::span<const std::optional<BigInt>> partial,
                         const PartitionIndex& level, const Partition& alpha,
                         const Partition& target) {
  const std::size_t col = level.at(target);
  if (col >= partial.size() || !partial[col])
    throw MissingDependency("zeta^(" + to_string(alpha) + ")_(" +
                            to_string(target) + ") not yet computed");
  return *partial[col];
}

BigInt exact_divide(const BigInt& bracket, int divisor, const Partition& alpha,
                    const Partition& beta, BuildStats* stats) {
  BigInt q, r;
  boost::multiprecision::divide_qr(bracket, BigInt(divisor), q, r);
  if (stats) ++stats->divisibility_checks;
  if (r != 0) {
    if (stats) ++stats->divisibility_failures;
    throw DivisibilityError("bracket " + bracket.str() + " for zeta^(" +
                            to_string(alpha) + ")_(" + to_string(beta) +
                            ") is not divisible by " + std::to_string(divisor));
  }
  return q;
}

}  // namespace

BigInt branching_value(const Partition& alpha, const Partition& beta,
                       const CharTable& prev) {
  check_level_inputs("branching_value", alpha, beta, prev);
  if (beta.last() != 1)
    throw std::invalid_argument("branching_value: last part of (" +
                                to_string(beta) + ") is not 1");
  const Partition lowered(sub_eps(beta, beta.length()));
  BigInt total = 0;
  for (const auto& d : descents(alpha)) total += prev.value(d.removed, lowered);
  return total;
}

BigInt recursion_value(const Partition& alpha, const Partition& beta,
                       const CharTable& prev, const PartitionIndex& level,
                       std::span<const std::optional<BigInt>> partial,
                       BuildStats* stats) {
  check_level_inputs("recursion_value", alpha, beta, prev);
  const int last = beta.last();
  if (last < 2)
    throw std::invalid_argument("recursion_value: last part of (" +
                                to_string(beta) + ") is below 2");
  const Partition lowered(sub_eps(beta, beta.length()));
  BigInt bracket = 0;
  for (const auto& d : descents(alpha))
    bracket += (alpha[d.i] - static_cast<int>(d.i)) *
               prev.value(d.removed, lowered);
  for (const auto& t : shift_terms(beta))
    bracket -= t.coeff * dependency(partial, level, alpha, t.target);
  return exact_divide(bracket, last - 1, alpha, beta, stats);
}

BigInt kappa_value(const Partition& alpha, const Partition& beta,
                   const CharTable& prev, const PartitionIndex& level,
                   std::span<const std::optional<BigInt>> partial) {
  check_level_inputs("kappa_value", alpha, beta, prev);
  const int last = beta.last();
  const int kappa = last == 1 ? 0 : 1;
  const Partition lowered(sub_eps(beta, beta.length()));
  BigInt bracket = 0;
  for (const auto& d : descents(alpha)) {
    const int factor = kappa == 0 ? 1 : alpha[d.i] - static_cast<int>(d.i);
    bracket += factor * prev.value(d.removed, lowered);
  }
  if (kappa == 1)
    for (const auto& t : shift_terms(beta))
      bracket -= t.coeff * dependency(partial, level, alpha, t.target);
  return exact_divide(bracket, last - kappa, alpha, beta, nullptr);
}

const BigInt& zeta(const Partition& alpha, const Partition& beta,
                   const TableStack& stack) {
  if (alpha.weight() != beta.weight())
    throw WeightMismatch("zeta: (" + to_string(alpha) + ") and (" +
                         to_string(beta) + ") have different weights");
  if (beta.weight() > stack.capacity())
    throw std::out_of_range("zeta: stack holds S_0..S_" +
                            std::to_string(stack.capacity()) +
                            ", requested S_" + std::to_string(beta.weight()));
  return stack.level(beta.weight()).value(alpha, beta);
}

CharTable build_level_reference(const CharTable& prev, BuildStats* stats) {
  PartitionIndex level(prev.n() + 1);
  const std::size_t size = level.size();
  std::vector<BigInt> values;
  values.reserve(size * size);
  for (const Partition& alpha : level.order()) {
    PartialRow row(size);
    for (std::size_t c = 0; c < size; ++c) {
      const Partition& beta = level[c];
      if (beta.last() == 1) {
        row[c] = branching_value(alpha, beta, prev);
        if (stats) ++stats->branching_evaluations;
      } else {
        row[c] = recursion_value(alpha, beta, prev, level, row, stats);
        if (stats) ++stats->recursion_evaluations;
      }
    }
    for (auto& v : row) values.push_back(std::move(*v));
  }
  return CharTable(std::move(level), std::move(values));
}

namespace {

struct ColumnPlan {
  std::size_t prev_col;
  int last;
  std::vector<std::pair<std::size_t, int>> shifts;  // (column, mu_j beta_j)
};

struct RowPlan {
  std::vector<std::pair<std::size_t, int>> terms;  // (prev row, alpha_i - i)
};

}  // namespace

CharTable build_level_parallel(const CharTable& prev, int threads,
                               BuildStats* stats) {
  PartitionIndex level(prev.n() + 1);
  const std::size_t size = level.size();
  const PartitionIndex& below = prev.index();

  std::vector<ColumnPlan> columns(size);
  for (std::size_t c = 0; c < size; ++c) {
    const Partition& beta = level[c];
    ColumnPlan& plan = columns[c];
    plan.last = beta.last();
    plan.prev_col = below.at(sub_eps(beta, beta.length()));
    if (plan.last >= 2) {
      for (const auto& t : shift_terms(beta)) {
        const std::size_t dep = level.at(t.target);
        if (dep >= c)
          throw std::logic_error("class (" + to_string(t.target) +
                                 ") does not precede (" + to_string(beta) +
                                 ")");
        plan.shifts.emplace_back(dep, t.coeff);
      }
    }
  }
  std::vector<RowPlan> rows(size);
  for (std::size_t r = 0; r < size; ++r) {
    const Partition& alpha = level[r];
    for (const auto& d : descents(alpha))
      rows[r].terms.emplace_back(below.at(d.removed),
                                 alpha[d.i] - static_cast<int>(d.i));
  }

  std::vector<BigInt> values(size * size);
  std::exception_ptr failure;
  std::uint64_t branching = 0, recursion = 0, checks = 0, failures = 0;
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const auto row_count = static_cast<long>(size);

#pragma omp parallel for schedule(dynamic) num_threads(team) \
    reduction(+ : branching, recursion, checks, failures)
  for (long r = 0; r < row_count; ++r) {
    try {
      const RowPlan& rp = rows[static_cast<std::size_t>(r)];
      BigInt* out = values.data() + static_cast<std::size_t>(r) * size;
      BigInt q, rem;
      for (std::size_t c = 0; c < size; ++c) {
        const ColumnPlan& cp = columns[c];
        BigInt acc = 0;
        if (cp.last == 1) {
          for (const auto& [pr, factor] : rp.terms) acc += prev(pr, cp.prev_col);
          ++branching;
          out[c] = std::move(acc);
          continue;
        }
        for (const auto& [pr, factor] : rp.terms)
          acc += factor * prev(pr, cp.prev_col);
        for (const auto& [dep, coeff] : cp.shifts) acc -= coeff * out[dep];
        ++recursion;
        ++checks;
        boost::multiprecision::divide_qr(acc, BigInt(cp.last - 1), q, rem);
        if (rem != 0) {
          ++failures;
          throw DivisibilityError(
              "bracket " + acc.str() + " for zeta^(" +
              to_string(level[static_cast<std::size_t>(r)]) + ")_(" +
              to_string(level[c]) + ") is not divisible by " +
              std::to_string(cp.last - 1));
        }
        out[c] = q;
      }
    } catch (...) {
#pragma omp critical(symchar_build_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (stats) {
    stats->branching_evaluations += branching;
    stats->recursion_evaluations += recursion;
    stats->divisibility_checks += checks;
    stats->divisibility_failures += failures;
  }
  if (failure) std::rethrow_exception(failure);
  return CharTable(std::move(level), std::move(values));
}

CharTable build_level(const CharTable& prev, const BuildOptions& options) {
  return options.serial_reference
             ? build_level_reference(prev, options.stats)
             : build_level_parallel(prev, options.threads, options.stats);
}

namespace {

CharTable trivial_table() {
  CharTable t(0);
  t.set(0, 0, 1);
  return t;
}

}  // namespace

TableStack build_table(int n, const BuildOptions& options) {
  if (n < 0) throw std::invalid_argument("build_table: n must be >= 0");
  TableStack stack;
  stack.tables.reserve(static_cast<std::size_t>(n) + 1);
  stack.tables.push_back(trivial_table());
  for (int k = 1; k <= n; ++k)
    stack.tables.push_back(build_level(stack.tables.back(), options));
  return stack;
}

CharTable build_top_table(int n, const BuildOptions& options) {
  if (n < 0) throw std::invalid_argument("build_top_table: n must be >= 0");
  CharTable current = trivial_table();
  for (int k = 1; k <= n; ++k) current = build_level(current, options);
  return current;
}

}  // namespace symchar
