#include <doctest.h>

#include "symchar/verify.hpp"

using namespace symchar;

namespace {

CharTable corrupted(int n, const std::string& alpha, const std::string& beta,
                    int delta) {
  CharTable t = build_top_table(n);
  const std::size_t r = t.index().at(parse_partition(alpha));
  const std::size_t c = t.index().at(parse_partition(beta));
  t.set(r, c, t(r, c) + delta);
  return t;
}

}  // namespace

TEST_CASE("reciprocity checks pass") {
  for (int n = 0; n <= 8; ++n) {
    const auto r = check_perm_reciprocity(n);
    CHECK(r.pass);
    CHECK(r.check_name == "perm_reciprocity");
    CHECK(r.params["n"] == n);
  }
  const TableStack stack = build_table(9);
  for (int n = 1; n <= 9; ++n) CHECK(check_irr_reciprocity(n, stack).pass);
  CHECK(check_irr_reciprocity(3).pass);
}

TEST_CASE("irreducible reciprocity catches a corrupted table") {
  TableStack stack = build_table(5);
  CharTable& top = stack.tables.back();
  const std::size_t r = top.index().at(Partition{3, 2});
  const std::size_t c = top.index().at(Partition{2, 2, 1});
  top.set(r, c, top(r, c) + 1);
  const auto report = check_irr_reciprocity(5, stack);
  CHECK_FALSE(report.pass);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->alpha == "3,2");
}

TEST_CASE("adjoint and commute over seeded trials") {
  for (std::size_t l = 0; l <= 4; ++l) {
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto r = check_adjoint(l, m, 100, 7 * l + m + 1);
      CHECK(r.pass);
      REQUIRE(r.seed);
      CHECK(*r.seed == 7 * l + m + 1);
    }
    CHECK(check_commute(l, 100, l + 1).pass);
  }
}

TEST_CASE("table checks pass on correct tables") {
  const TableStack stack = build_table(10);
  for (int n = 0; n <= 10; ++n) {
    const CharTable& t = stack.level(n);
    CHECK(check_orthogonality(t).pass);
    CHECK(check_degree_sum(t).pass);
    CHECK(check_against_mn(t).pass);
    CHECK(check_ncycle(t).pass);
    if (n <= 6) CHECK(check_chi_equals_zeta(t).pass);
  }
  CHECK(check_chi_equals_zeta(4).pass);
}

TEST_CASE("a single corrupted entry is named") {
  const CharTable bad = corrupted(6, "4,1,1", "3,2,1", 1);
  const BigInt original = build_top_table(6).value({4, 1, 1}, {3, 2, 1});

  auto report = check_against_mn(bad);
  CHECK_FALSE(report.pass);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->alpha == "4,1,1");
  CHECK(report.counterexample->beta == "3,2,1");
  CHECK(report.counterexample->expected == original.str());
  CHECK(report.counterexample->actual == BigInt(original + 1).str());

  report = check_orthogonality(bad);
  CHECK_FALSE(report.pass);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->alpha == "4,1,1");
  CHECK(report.counterexample->beta == "3,2,1");

  report = check_chi_equals_zeta(bad);
  CHECK_FALSE(report.pass);
  CHECK(report.counterexample->alpha == "4,1,1");

  // An n-cycle entry off a hook.
  report = check_ncycle(corrupted(6, "3,3", "6", -1));
  CHECK_FALSE(report.pass);
  CHECK(report.counterexample->alpha == "3,3");
  CHECK(report.counterexample->expected == "0");
  CHECK(report.counterexample->actual == "-1");

  report = check_degree_sum(corrupted(5, "3,2", "1,1,1,1,1", 1));
  CHECK_FALSE(report.pass);
  CHECK(report.counterexample->expected == "120");
}

TEST_CASE("ncycle example table for S_3") {
  const CharTable t = build_top_table(3);
  const auto report = check_ncycle(t);
  CHECK(report.pass);
  CHECK(t.value({2, 1}, {3}) == -1);
  CHECK(t.value({1, 1, 1}, {3}) == 1);
}

TEST_CASE("divisibility reports its check count") {
  const auto report = check_divisibility(12, 2);
  CHECK(report.pass);
  CHECK(report.params["failures"] == 0);
  CHECK(report.params["checks"].get<std::uint64_t>() > 0);
  CHECK(check_divisibility(12, 1).params["checks"] == report.params["checks"]);
  CHECK(check_divisibility(0).params["checks"] == 0);
}

TEST_CASE("to_json layout") {
  auto j = check_perm_reciprocity(3).to_json();
  CHECK(j["check"] == "perm_reciprocity");
  CHECK(j["pass"] == true);
  CHECK(j["params"]["n"] == 3);
  CHECK_FALSE(j.contains("counterexample"));
  CHECK_FALSE(j.contains("seed"));

  j = check_adjoint(2, 2, 5, 9).to_json();
  CHECK(j["seed"] == 9);
  CHECK(j["params"]["trials"] == 5);

  j = check_against_mn(corrupted(4, "2,2", "2,2", 3)).to_json();
  CHECK(j["pass"] == false);
  CHECK(j["counterexample"]["alpha"] == "2,2");
  CHECK(j["counterexample"]["beta"] == "2,2");
  CHECK(j["counterexample"]["expected"] == "2");
  CHECK(j["counterexample"]["actual"] == "5");
}

TEST_CASE("seeded checks are deterministic") {
  CHECK(check_adjoint(3, 2, 20, 42).to_json() ==
        check_adjoint(3, 2, 20, 42).to_json());
  CHECK(check_commute(3, 20, 42).to_json() == check_commute(3, 20, 42).to_json());
}
