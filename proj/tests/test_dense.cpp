#include "doctest.h"
#include "oracle.hpp"
#include "sg/closed_forms.hpp"
#include "sg/dense.hpp"

using namespace sg;
using namespace sg::dense;

TEST_CASE("parallel kernels match the serial reference") {
  for (HeapSize bound : {0u, 1u, 2u, 7u, 64u, 200u}) {
    CAPTURE(bound);
    CHECK(solve_delete_nim(bound) == solve_delete_nim_reference(bound));
    if (bound >= 1) CHECK(solve_vdn(bound) == solve_vdn_reference(bound));
  }
}

TEST_CASE("dense grids match the rule-text oracle") {
  oracle::TwoHeapOracle o;
  const auto dn = solve_delete_nim(30);
  const auto vdn = solve_vdn(30);
  for (HeapSize x = 0; x <= 30; ++x) {
    for (HeapSize y = 0; y <= 30; ++y) {
      REQUIRE(dn.at(x, y) == o.delete_nim(x, y));
      if (x >= 1 && y >= 1) REQUIRE(vdn.at(x, y) == o.vdn(x, y));
    }
  }
  CHECK(vdn.raw(0, 3) == GrundyGrid::kUnused);
}

TEST_CASE("worker count does not change the grid") {
  const auto one = solve_delete_nim(1500, {.workers = 1});
  const auto four = solve_delete_nim(1500, {.workers = 4});
  CHECK(one == four);
  CHECK(solve_vdn(700, {.workers = 1}) == solve_vdn(700, {.workers = 3}));
}

TEST_CASE("dense grid budget") {
  CHECK_THROWS_AS(solve_delete_nim(100, {.position_budget = 100}), ResourceBudgetExceeded);
  CHECK_NOTHROW(solve_delete_nim(9, {.position_budget = 100}));
  CHECK_THROWS_AS(solve_vdn(HeapSize{1} << 40), ResourceBudgetExceeded);
}

TEST_CASE("DenseEngine answers engine queries and grows on demand") {
  DenseEngine<DeleteNim> dn;
  CHECK(dn.grundy({3, 2}) == 2);
  CHECK(dn.best_move({3, 2}) == DeleteNimPosition{2, 0});
  CHECK_FALSE(dn.best_move({2, 2}).has_value());
  CHECK(dn.grundy({500, 77}) == delete_nim_grundy(500, 77));
  CHECK(dn.classify({0, 0}) == Outcome::P);

  DenseEngine<Vdn> vdn;
  CHECK(vdn.grundy({4, 3}) == 2);
  CHECK(vdn.best_move({2, 2}) == VdnPosition{1, 1});
}
