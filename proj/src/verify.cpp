#include "symchar/verify.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "symchar/formal.hpp"
#include "symchar/mn.hpp"
#include "symchar/tabloid.hpp"

namespace symchar {

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"check", check_name}, {"params", params}, {"pass", pass}};
  if (counterexample) {
    j["counterexample"] = {{"alpha", counterexample->alpha},
                           {"beta", counterexample->beta},
                           {"expected", counterexample->expected},
                           {"actual", counterexample->actual}};
    if (!counterexample->detail.empty())
      j["counterexample"]["detail"] = counterexample->detail;
  }
  if (seed) j["seed"] = *seed;
  return j;
}

namespace {

CheckReport start(std::string name, nlohmann::json params) {
  CheckReport report;
  report.check_name = std::move(name);
  report.params = std::move(params);
  return report;
}

void fail(CheckReport& report, Counterexample ce) {
  if (!report.pass) return;  // keep the first (smallest) counterexample
  report.pass = false;
  report.counterexample = std::move(ce);
}

template <class Sum>
std::string describe(const Sum& s, const char* symbol) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [index, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + symbol + "(" + to_string(index) + ")";
  }
  return out;
}

// Moves entries one step at a time toward `target` weight within [lo, hi].
std::vector<int> random_entries(std::mt19937_64& rng, std::size_t len, int lo,
                                int hi, long target) {
  std::vector<int> v(len);
  std::uniform_int_distribution<int> entry(lo, hi);
  for (int& x : v) x = entry(rng);
  if (len == 0) return v;
  target = std::clamp(target, lo * static_cast<long>(len),
                      hi * static_cast<long>(len));
  std::uniform_int_distribution<std::size_t> pos(0, len - 1);
  long sum = 0;
  for (int x : v) sum += x;
  while (sum != target) {
    int& x = v[pos(rng)];
    if (sum < target && x < hi) {
      ++x;
      ++sum;
    } else if (sum > target && x > lo) {
      --x;
      --sum;
    }
  }
  return v;
}

BigInt random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(1, 3);
  std::bernoulli_distribution negative(0.5);
  const int v = c(rng);
  return negative(rng) ? -v : v;
}

}  // namespace

CheckReport check_perm_reciprocity(int n) {
  CheckReport report = start("perm_reciprocity", {{"n", n}});
  if (n < 1) return report;
  const auto alphas = partitions_of(n);
  const auto betas = partitions_of(n - 1);
  for (const auto& alpha : alphas) {
    for (const auto& beta : betas) {
      BigInt lhs = 0;
      for (std::size_t i = 1; i <= alpha.length(); ++i)
        lhs += (alpha[i] - 1) * xi(sub_eps(alpha, i), beta);
      BigInt rhs = 0;
      for (std::size_t j = 1; j <= beta.length(); ++j)
        rhs += beta[j] * xi(alpha, Partition::sorted(add_eps(beta, j)));
      if (lhs != rhs)
        fail(report, {to_string(alpha), to_string(beta), lhs.str(), rhs.str(),
                      "lhs vs rhs"});
    }
  }
  return report;
}

CheckReport check_irr_reciprocity(int n, const TableStack& stack) {
  CheckReport report = start("irr_reciprocity", {{"n", n}});
  if (n < 1) return report;
  const CharTable& top = stack.level(n);
  const CharTable& below = stack.level(n - 1);
  for (const auto& alpha : top.order()) {
    for (const auto& beta : below.order()) {
      BigInt lhs = 0;
      for (std::size_t i = 1; i <= alpha.length(); ++i)
        if (alpha[i] > alpha[i + 1])
          lhs += (alpha[i] - static_cast<int>(i)) *
                 below.value(Partition(sub_eps(alpha, i)), beta);
      BigInt rhs = 0;
      for (std::size_t j = 1; j <= beta.length(); ++j)
        rhs += beta[j] * top.value(alpha, Partition::sorted(add_eps(beta, j)));
      if (lhs != rhs)
        fail(report, {to_string(alpha), to_string(beta), lhs.str(), rhs.str(),
                      "lhs vs rhs"});
    }
  }
  return report;
}

CheckReport check_irr_reciprocity(int n) {
  return check_irr_reciprocity(n, build_table(std::max(n, 0)));
}

CheckReport check_adjoint(std::size_t l, std::size_t m, int trials,
                          std::uint64_t seed) {
  CheckReport report = start("adjoint", {{"l", l}, {"m", m}, {"trials", trials}});
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight_dist(1, 8);
  std::uniform_int_distribution<int> term_count(1, 3);
  std::bernoulli_distribution off_weight(0.25);
  for (int t = 0; t < trials; ++t) {
    const int w = weight_dist(rng);
    FormalSumA a;
    for (int k = term_count(rng); k > 0; --k) {
      const long target = off_weight(rng) ? w + 1 : w;
      a.add(IntSeq(random_entries(rng, l, -2, 5, target)), random_coeff(rng));
    }
    FormalSumB b;
    for (int k = term_count(rng); k > 0; --k)
      b.add(IntSeq(random_entries(rng, m, 0, 5, w - 1)), random_coeff(rng));

    const BigInt lhs = pairing(delta_minus(l, a), b);
    const BigInt rhs = pairing(a, delta_plus(m, b));
    if (lhs != rhs)
      fail(report, {describe(a, "x^"), describe(b, "x_"), lhs.str(),
                    rhs.str(), "trial " + std::to_string(t)});
  }
  return report;
}

CheckReport check_commute(std::size_t l, int trials, std::uint64_t seed) {
  CheckReport report = start("commute", {{"l", l}, {"trials", trials}});
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 5);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> v(l);
    for (int& x : v) x = entry(rng);
    const FormalSumA a{IntSeq(std::move(v))};
    const FormalSumA left = det_op(l, delta_minus(l, a));
    const FormalSumA right = delta_minus(l, det_op(l, a));
    if (left != right)
      fail(report, {describe(a, "x^"), "", describe(left, "x^"),
                    describe(right, "x^"), "trial " + std::to_string(t)});
  }
  return report;
}

CheckReport check_chi_equals_zeta(const CharTable& table) {
  CheckReport report = start("chi_equals_zeta", {{"n", table.n()}});
  for (std::size_t r = 0; r < table.size(); ++r)
    for (std::size_t c = 0; c < table.size(); ++c) {
      const BigInt expected = chi(table.order()[r], table.order()[c]);
      if (expected != table(r, c))
        fail(report, {to_string(table.order()[r]), to_string(table.order()[c]),
                      expected.str(), table(r, c).str(), "chi vs zeta"});
    }
  return report;
}

CheckReport check_chi_equals_zeta(int n) {
  return check_chi_equals_zeta(build_top_table(n));
}

CheckReport check_orthogonality(const CharTable& table) {
  CheckReport report = start("orthogonality", {{"n", table.n()}});
  const std::size_t size = table.size();
  const auto& order = table.order();
  const BigInt group_order = factorial(table.n());
  std::vector<ClassInfo> classes;
  for (const auto& beta : order) classes.push_back(class_info(beta));

  std::vector<Counterexample> row_failures, col_failures;
  std::vector<std::size_t> bad_row_diag, bad_col_diag;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t g = a; g < size; ++g) {
      BigInt sum = 0;
      for (std::size_t c = 0; c < size; ++c)
        sum += classes[c].class_size * table(a, c) * table(g, c);
      const BigInt expected = a == g ? group_order : BigInt(0);
      if (sum != expected) {
        row_failures.push_back({to_string(order[a]), to_string(order[g]),
                                expected.str(), sum.str(), "row orthogonality"});
        if (a == g) bad_row_diag.push_back(a);
      }
    }
  for (std::size_t b = 0; b < size; ++b)
    for (std::size_t g = b; g < size; ++g) {
      BigInt sum = 0;
      for (std::size_t r = 0; r < size; ++r) sum += table(r, b) * table(r, g);
      const BigInt expected = b == g ? classes[b].centralizer_order : BigInt(0);
      if (sum != expected) {
        col_failures.push_back({to_string(order[b]), to_string(order[g]),
                                expected.str(), sum.str(),
                                "column orthogonality"});
        if (b == g) bad_col_diag.push_back(b);
      }
    }
  if (!bad_row_diag.empty() && !bad_col_diag.empty()) {
    const std::size_t r = bad_row_diag.front();
    const std::size_t c = bad_col_diag.front();
    fail(report, {to_string(order[r]), to_string(order[c]), "",
                  table(r, c).str(),
                  "entry lies on a failing row norm and a failing column "
                  "norm"});
  } else if (!row_failures.empty()) {
    fail(report, row_failures.front());
  } else if (!col_failures.empty()) {
    fail(report, col_failures.front());
  }
  return report;
}

CheckReport check_degree_sum(const CharTable& table) {
  CheckReport report = start("degree_sum", {{"n", table.n()}});
  const std::size_t identity = table.size() - 1;  // (1^n) is last in order
  BigInt sum = 0;
  for (std::size_t r = 0; r < table.size(); ++r)
    sum += table(r, identity) * table(r, identity);
  const BigInt expected = factorial(table.n());
  if (sum != expected)
    fail(report, {"", to_string(table.order()[identity]), expected.str(),
                  sum.str(), "sum of squared degrees"});
  return report;
}

CheckReport check_against_mn(const CharTable& table) {
  CheckReport report = start("against_mn", {{"n", table.n()}});
  const CharTable oracle = mn_table(table.n());
  for (std::size_t r = 0; r < table.size(); ++r)
    for (std::size_t c = 0; c < table.size(); ++c)
      if (oracle(r, c) != table(r, c))
        fail(report, {to_string(table.order()[r]), to_string(table.order()[c]),
                      oracle(r, c).str(), table(r, c).str(), "MN vs table"});
  return report;
}

CheckReport check_ncycle(const CharTable& table) {
  CheckReport report = start("ncycle", {{"n", table.n()}});
  const int n = table.n();
  if (n < 1) return report;
  const std::size_t col = 0;  // (n) is first in order
  for (std::size_t r = 0; r < table.size(); ++r) {
    const Partition& alpha = table.order()[r];
    bool hook = true;
    for (std::size_t i = 2; i <= alpha.length(); ++i)
      if (alpha[i] != 1) hook = false;
    const int legs = static_cast<int>(alpha.length()) - 1;
    const BigInt expected = hook ? BigInt(legs % 2 == 0 ? 1 : -1) : BigInt(0);
    if (table(r, col) != expected)
      fail(report, {to_string(alpha), to_string(table.order()[col]),
                    expected.str(), table(r, col).str(), "n-cycle value"});
  }
  return report;
}

CheckReport check_divisibility(int n, int threads) {
  CheckReport report = start("divisibility", {{"n", n}});
  BuildStats stats;
  try {
    BuildOptions options;
    options.threads = threads;
    options.stats = &stats;
    build_top_table(n, options);
  } catch (const DivisibilityError& e) {
    fail(report, {"", "", "", "", e.what()});
  }
  report.params["checks"] = stats.divisibility_checks;
  report.params["failures"] = stats.divisibility_failures;
  if (stats.divisibility_failures != 0 && report.pass)
    fail(report, {"", "", "0", std::to_string(stats.divisibility_failures),
                  "divisibility failures"});
  return report;
}

}  // namespace symchar
