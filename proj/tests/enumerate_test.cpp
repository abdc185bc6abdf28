#include <cstdlib>

#include "doctest.h"
#include "morita/enumerate.hpp"
#include "morita/errors.hpp"
#include "morita/parallel.hpp"
#include "morita/workspace.hpp"
#include "oracles.hpp"

using namespace morita;

TEST_SUITE("enumerate") {
  TEST_CASE("module counts match the brute-force orbit count") {
    auto k = Algebra::ground(2);
    auto dual_numbers = Algebra::truncated_polynomial(2, 2);
    auto kk = Algebra::split_semisimple(2, 2);
    CHECK(enumerate_modules(k, 1).size() == 2);
    CHECK(enumerate_modules(kk, 1).size() == 3);
    for (auto const& a : {k, dual_numbers, kk}) {
      for (std::size_t d = 0; d <= 2; ++d) {
        CAPTURE(a->name());
        CAPTURE(d);
        CHECK(enumerate_modules_of_dim(a, d).size() == oracle::module_classes(a, d));
      }
    }
    CHECK(enumerate_modules(dual_numbers, 2).size() == 4);
    CHECK(enumerate_modules_of_dim(dual_numbers, 3).size() == oracle::module_classes(dual_numbers, 3));
  }

  TEST_CASE("enumerated modules are pairwise non-isomorphic") {
    auto ms = enumerate_modules(Algebra::truncated_polynomial(2, 2), 2);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK_FALSE(oracle::isomorphic(ms[i], ms[j]));
    }
  }

  TEST_CASE("E0 tuples have zero structure maps") {
    for (auto const& dm : enumerate_delta_modules(fixture_context("E0"), 1)) {
      CHECK(dm.f().is_zero());
      CHECK(dm.g().is_zero());
    }
  }

  TEST_CASE("tuple counts match the enumeration over Delta") {
    for (auto const& name : {"E1", "E2"}) {
      auto ctx = fixture_context(name);
      auto tuples = enumerate_delta_modules(ctx, 1);
      std::size_t via_delta = 0;
      for (auto const& z : enumerate_modules(ctx->delta(), 2)) {
        auto u = unpack(ctx, z).tuple;
        if (u.x().dim() <= 1 && u.y().dim() <= 1) ++via_delta;
      }
      CAPTURE(name);
      CHECK(tuples.size() == via_delta);
    }
  }

  TEST_CASE("enumeration is deterministic and independent of the worker count") {
    auto ctx = fixture_context("E1");
    set_default_jobs(1);
    auto a = enumerate_delta_modules(ctx, 1);
    set_default_jobs(4);
    auto b = enumerate_delta_modules(ctx, 1);
    set_default_jobs(1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].describe() == b[i].describe());
  }

  TEST_CASE("the budget aborts oversized scans") {
    ::setenv(kBudgetEnvVar, "10", 1);
    CHECK_THROWS_AS(enumerate_modules_of_dim(Algebra::truncated_polynomial(2, 3), 3), BudgetExceeded);
    ::unsetenv(kBudgetEnvVar);
    CHECK(enumeration_budget() == kDefaultEnumerationBudget);
  }
}
