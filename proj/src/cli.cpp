#include "symchar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symchar/mn.hpp"
#include "symchar/recursion.hpp"
#include "symchar/table_io.hpp"
#include "symchar/verify.hpp"

namespace symchar::cli {

namespace {

const std::vector<std::string> kCheckNames = {
    "perm_reciprocity", "irr_reciprocity", "adjoint",   "commute",
    "chi_equals_zeta",  "orthogonality",   "degree_sum", "against_mn",
    "ncycle",           "divisibility"};

// Largest n the determinantal check is run at.
constexpr int kChiLimit = 8;

struct Globals {
  int threads = 0;
  std::string cache_dir;
};

CharTable table_for(int n, const Globals& g) {
  std::optional<TableCache> cache;
  if (!g.cache_dir.empty()) {
    cache.emplace(g.cache_dir);
    if (auto hit = cache->load(n)) return std::move(*hit);
  }
  BuildOptions options;
  options.threads = g.threads;
  CharTable table = build_top_table(n, options);
  if (cache) cache->store(table);
  return table;
}

int cmd_value(const std::string& alpha_text, const std::string& beta_text,
              const Globals& g, std::ostream& out, std::ostream& err) {
  Partition alpha, beta;
  try {
    alpha = parse_partition(alpha_text);
  } catch (const ParseError& e) {
    err << "--alpha: " << e.what() << '\n';
    return kUsage;
  }
  try {
    beta = parse_partition(beta_text);
  } catch (const ParseError& e) {
    err << "--beta: " << e.what() << '\n';
    return kUsage;
  }
  if (alpha.weight() != beta.weight()) {
    err << "weight mismatch: --alpha \"" << alpha_text << "\" has weight "
        << alpha.weight() << " but --beta \"" << beta_text << "\" has weight "
        << beta.weight() << '\n';
    return kSemantic;
  }
  const CharTable table = table_for(alpha.weight(), g);
  out << table.value(alpha, beta) << '\n';
  return kOk;
}

int cmd_table(int n, const std::string& format_name, const std::string& path,
              const Globals& g, std::ostream& out, std::ostream& err) {
  if (n < 0) {
    err << "--n must be >= 0 (got " << n << ")\n";
    return kUsage;
  }
  OutputFormat format;
  try {
    format = parse_format(format_name);
  } catch (const std::invalid_argument& e) {
    err << "--format: " << e.what() << '\n';
    return kUsage;
  }
  const CharTable table = table_for(n, g);
  if (path.empty() || path == "-") {
    write_table(out, table, format);
    return kOk;
  }
  std::ofstream file(path);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return kIo;
  }
  write_table(file, table, format);
  file.close();
  if (!file) {
    err << "write to " << path << " failed\n";
    return kIo;
  }
  return kOk;
}

std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> chosen;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "all") {
      chosen.insert(kCheckNames.begin(), kCheckNames.end());
    } else if (std::find(kCheckNames.begin(), kCheckNames.end(), name) !=
               kCheckNames.end()) {
      chosen.insert(name);
    } else {
      throw std::invalid_argument("unknown check \"" + name + "\"");
    }
  }
  return chosen;
}

int cmd_verify(int n, const std::string& list, int trials, std::uint64_t seed,
               std::optional<std::uint64_t> fault_seed, const Globals& g,
               std::ostream& out, std::ostream& err) {
  if (n < 0) {
    err << "--n must be >= 0 (got " << n << ")\n";
    return kUsage;
  }
  std::set<std::string> checks;
  try {
    checks = parse_checks(list);
  } catch (const std::invalid_argument& e) {
    err << "--checks: " << e.what() << '\n';
    return kUsage;
  }

  BuildOptions options;
  options.threads = g.threads;
  TableStack stack = build_table(n, options);
  if (fault_seed) {
    CharTable& top = stack.tables.back();
    std::mt19937_64 rng(*fault_seed);
    std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
    const std::size_t r = pick(rng), c = pick(rng);
    err << "injected fault at zeta^(" << to_string(top.order()[r]) << ")_("
        << to_string(top.order()[c]) << "): " << top(r, c) << " -> "
        << top(r, c) + 1 << '\n';
    top.set(r, c, top(r, c) + 1);
  }

  bool all_pass = true;
  auto emit = [&](const CheckReport& report) {
    all_pass = all_pass && report.pass;
    out << report.to_json().dump() << '\n';
  };
  auto wants = [&](const char* name) { return checks.count(name) > 0; };

  for (int k = 0; k <= n; ++k) {
    const CharTable& table = stack.level(k);
    if (wants("perm_reciprocity") && k >= 1) emit(check_perm_reciprocity(k));
    if (wants("irr_reciprocity") && k >= 1) emit(check_irr_reciprocity(k, stack));
    if (wants("chi_equals_zeta") && k <= kChiLimit)
      emit(check_chi_equals_zeta(table));
    if (wants("orthogonality")) emit(check_orthogonality(table));
    if (wants("degree_sum")) emit(check_degree_sum(table));
    if (wants("against_mn")) emit(check_against_mn(table));
    if (wants("ncycle")) emit(check_ncycle(table));
  }
  for (std::size_t l = 0; l <= 4; ++l) {
    if (wants("adjoint"))
      for (std::size_t m = 0; m <= 4; ++m)
        emit(check_adjoint(l, m, trials, seed + 7 * l + m));
    if (wants("commute")) emit(check_commute(l, trials, seed + l));
  }
  if (wants("divisibility")) emit(check_divisibility(n, g.threads));
  return all_pass ? kOk : kVerificationFailed;
}

int cmd_bench(int n, const std::string& engine, const Globals& g,
              std::ostream& out, std::ostream& err) {
  if (n < 0) {
    err << "--n must be >= 0 (got " << n << ")\n";
    return kUsage;
  }
  if (engine != "recursion" && engine != "mn" && engine != "both") {
    err << "--engine must be recursion, mn or both\n";
    return kUsage;
  }
  using Clock = std::chrono::steady_clock;
  nlohmann::json report{{"n", n}, {"classes", partition_count(n)}};
  std::optional<CharTable> rec, mn;
  if (engine != "mn") {
    BuildStats stats;
    BuildOptions options;
    options.threads = g.threads;
    options.stats = &stats;
    const auto t0 = Clock::now();
    rec = build_top_table(n, options);
    const std::chrono::duration<double> dt = Clock::now() - t0;
    report["recursion"] = {
        {"seconds", dt.count()},
        {"evaluations",
         stats.branching_evaluations + stats.recursion_evaluations},
        {"branching_evaluations", stats.branching_evaluations},
        {"recursion_evaluations", stats.recursion_evaluations},
        {"threads", g.threads}};
  }
  if (engine != "recursion") {
    std::uint64_t evals = 0;
    const auto t0 = Clock::now();
    mn = mn_table(n, &evals);
    const std::chrono::duration<double> dt = Clock::now() - t0;
    report["mn"] = {{"seconds", dt.count()}, {"evaluations", evals}};
  }
  if (rec && mn) report["tables_equal"] = (*rec == *mn);
  out << report.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact character tables of the symmetric groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "OpenMP threads per level (0: default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cache", g.cache_dir, "Directory for cached tables");

  std::string alpha, beta;
  auto* value = app.add_subcommand("value", "Print one character value");
  value->add_option("--alpha", alpha, "Character, e.g. 2,1")->required();
  value->add_option("--beta", beta, "Class (cycle type), e.g. 3")->required();

  int n = 0;
  std::string format = "pretty", path;
  auto* table = app.add_subcommand("table", "Emit the character table of S_n");
  table->add_option("--n", n, "Degree")->required();
  table->add_option("--format", format, "pretty | csv | json");
  table->add_option("--out", path, "Output file (default stdout)");

  std::string checks = "all";
  int trials = 100;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> fault;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--n", n, "Largest degree")->required();
  verify->add_option("--checks", checks, "Comma-separated checks or 'all'");
  verify->add_option("--trials", trials, "Randomized trials per check")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--inject-fault", fault,
                     "Corrupt one entry of the S_n table (seeded)");

  std::string engine = "both";
  auto* bench = app.add_subcommand("bench", "Time recursion vs MN");
  bench->add_option("--n", n, "Degree")->required();
  bench->add_option("--engine", engine, "recursion | mn | both");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*value) return cmd_value(alpha, beta, g, out, err);
    if (*table) return cmd_table(n, format, path, g, out, err);
    if (*verify) return cmd_verify(n, checks, trials, seed, fault, g, out, err);
    if (*bench) return cmd_bench(n, engine, g, out, err);
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace symchar::cli
