#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "symchar/recursion.hpp"

namespace symchar {

struct Counterexample {
  std::string alpha;
  std::string beta;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct CheckReport {
  std::string check_name;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::optional<std::uint64_t> seed;

  /// {check, params, pass, counterexample?, seed?}
  nlohmann::json to_json() const;
};

/// sum_i (alpha_i - 1) xi^{alpha-e_i}_beta = sum_j beta_j xi^alpha_{beta+e_j}
/// for all alpha |- n, beta |- n-1, with l = l(alpha), m = l(beta).
CheckReport check_perm_reciprocity(int n);

/// sum_{descents i} (alpha_i - i) zeta^{alpha-e_i}_beta
///   = sum_j beta_j zeta^alpha_{sort(beta+e_j)}
/// for all alpha |- n, beta |- n-1. `stack` must reach n.
CheckReport check_irr_reciprocity(int n, const TableStack& stack);
CheckReport check_irr_reciprocity(int n);

/// Random a in A_l, b in B_m: (delta_minus(a), b) = (a, delta_plus(b)).
CheckReport check_adjoint(std::size_t l, std::size_t m, int trials,
                          std::uint64_t seed = 1);

/// Random x^alpha, alpha in Gamma_l: D_l delta_minus = delta_minus D_l.
CheckReport check_commute(std::size_t l, int trials, std::uint64_t seed = 1);

/// chi(alpha, beta) = zeta^alpha_beta for all alpha, beta |- n. Factorial
/// cost in l(alpha); intended for n <= 8.
CheckReport check_chi_equals_zeta(const CharTable& table);
CheckReport check_chi_equals_zeta(int n);

/// Row and column orthogonality with exact class sizes. When a row and a
/// column both fail on the diagonal, the counterexample names their shared
/// entry.
CheckReport check_orthogonality(const CharTable& table);

/// sum_alpha (zeta^alpha_{1^n})^2 = n!.
CheckReport check_degree_sum(const CharTable& table);

/// Entrywise equality with the Murnaghan-Nakayama table.
CheckReport check_against_mn(const CharTable& table);

/// Column (n): (-1)^r on hooks (n-r, 1^r), 0 elsewhere.
CheckReport check_ncycle(const CharTable& table);

/// Builds S_0..S_n and reports how many case-(ii) brackets were checked for
/// exact division and how many failed.
CheckReport check_divisibility(int n, int threads = 0);

}  // namespace symchar
