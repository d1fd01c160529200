#include <sstream>

#include "doctest.h"
#include "sg/verification.hpp"

using namespace sg;

namespace {

void check_same(const VerificationReport& a, const VerificationReport& b) {
  CHECK(a.check == b.check);
  CHECK(a.bound == b.bound);
  CHECK(a.positions_checked == b.positions_checked);
  CHECK(a.mismatches == b.mismatches);
  CHECK(a.passed() == b.passed());
}

}  // namespace

TEST_CASE("verify_delete_nim_formula examples") {
  auto r = verify_delete_nim_formula(0);
  CHECK(r.passed());
  CHECK(r.positions_checked == 1);

  r = verify_delete_nim_formula(64);
  CHECK(r.passed());
  CHECK(r.positions_checked == 2145);

  r = verify_delete_nim_formula(64, {.backend = Backend::generic});
  CHECK(r.passed());
  CHECK(r.positions_checked == 2145);
}

TEST_CASE("verify_vdn_formula examples") {
  auto r = verify_vdn_formula(1);
  CHECK(r.passed());
  CHECK(r.positions_checked == 1);

  r = verify_vdn_formula(2);
  CHECK(r.passed());
  CHECK(r.positions_checked == 3);

  CHECK(verify_vdn_formula(256).passed());
  CHECK(verify_vdn_formula(256, {.backend = Backend::generic}).passed());
  CHECK_THROWS_AS(verify_vdn_formula(0), DomainError);
}

TEST_CASE("verify_bouton examples") {
  auto r = verify_bouton(1, 8);
  CHECK(r.passed());
  CHECK(r.positions_checked == 9);

  r = verify_bouton(3, 7);
  CHECK(r.passed());
  CHECK(r.positions_checked == 120);  // C(7+3, 3)

  r = verify_bouton(3, 16);
  CHECK(r.passed());
  CHECK(r.positions_checked == 969);  // C(16+3, 3)
  CHECK(r.parameters == "heaps=3,size=16");
}

TEST_CASE("verify_proof_steps examples") {
  auto r = verify_proof_steps(0, 0);
  CHECK(r.passed());
  r = verify_proof_steps(3, 2);
  CHECK(r.passed());
  // y-heap fallback: bit 0 is clear in x=2 but set in y=1
  CHECK(verify_proof_steps(2, 1).passed());
  CHECK(verify_proof_steps(1, 2).passed());

  r = verify_proof_steps_sweep(128);
  CHECK(r.passed());
  CHECK(r.positions_checked == 129 * 130 / 2);
}

TEST_CASE("verify_sum_theorem examples") {
  auto r = verify_sum_theorem(0);
  CHECK(r.passed());
  CHECK(r.positions_checked == 1);
  r = verify_sum_theorem(1);
  CHECK(r.passed());
  CHECK(r.positions_checked == 9);
  r = verify_sum_theorem(12);
  CHECK(r.passed());
  CHECK(r.positions_checked == 91 * 91);
}

TEST_CASE("isomorphism, optimal play and traversal order sweeps") {
  CHECK(verify_isomorphism(64).passed());
  const auto play = verify_optimal_play(64);
  CHECK(play.passed());
  CHECK(play.positions_checked == 2145);
  CHECK(verify_traversal_order(32, {1, 2, 3}).passed());
}

TEST_CASE("reports do not depend on the worker count") {
  check_same(verify_delete_nim_formula(300, {.workers = 1}), verify_delete_nim_formula(300, {.workers = 3}));
  check_same(verify_bouton(3, 10, {.workers = 1}), verify_bouton(3, 10, {.workers = 4}));
  check_same(verify_sum_theorem(6, {.workers = 1}), verify_sum_theorem(6, {.workers = 2}));
  check_same(verify_proof_steps_sweep(40, {.workers = 1}), verify_proof_steps_sweep(40, {.workers = 5}));
  check_same(verify_optimal_play(20, {.workers = 1}), verify_optimal_play(20, {.workers = 3}));
}

TEST_CASE("budget exhaustion surfaces as an exception") {
  CHECK_THROWS_AS(verify_delete_nim_formula(100, {.position_budget = 50}), ResourceBudgetExceeded);
  CHECK_THROWS_AS(verify_bouton(3, 16, {.position_budget = 5}), ResourceBudgetExceeded);
  CHECK_THROWS_AS(verify_sum_theorem(6, {.position_budget = 20}), ResourceBudgetExceeded);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.check = "demo";
  r.bound = 3;
  r.positions_checked = 10;
  r.mismatches.push_back({"3,2", "2", "1"});
  r.elapsed_ms = 1.25;

  std::ostringstream os;
  write_text(os, r, false);
  CHECK(os.str() == "FAIL demo bound=3 checked=10 mismatches=1\n  mismatch 3,2 expected=2 actual=1\n");

  const std::vector<VerificationReport> reports{r, verify_delete_nim_formula(4)};
  const auto back = reports_from_json(to_json(reports));
  REQUIRE(back.size() == 2);
  check_same(back[0], reports[0]);
  check_same(back[1], reports[1]);
  CHECK(back[0].elapsed_ms == doctest::Approx(1.25));
  CHECK(to_json(reports, false).find("elapsed_ms") == std::string::npos);
}

TEST_CASE("merge keeps partition order") {
  std::vector<std::vector<Mismatch>> parts(3);
  parts[2].push_back({"2,0", "a", "b"});
  parts[0].push_back({"0,0", "a", "b"});
  parts[0].push_back({"1,0", "a", "b"});
  const auto merged = merge_mismatches(parts);
  REQUIRE(merged.size() == 3);
  CHECK(merged[0].position == "0,0");
  CHECK(merged[1].position == "1,0");
  CHECK(merged[2].position == "2,0");
}
