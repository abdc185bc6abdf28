#include "doctest.h"
#include "morita/enumerate.hpp"
#include "morita/errors.hpp"
#include "morita/workspace.hpp"
#include "oracles.hpp"

using namespace morita;

namespace {

AlgebraPtr dual_numbers() { return Algebra::truncated_polynomial(2, 2, "A"); }

Module simple(AlgebraPtr const& a) {
  return Module(a, Side::left, 1, {Mat::identity(2, 1), Mat::zero(2, 1, 1)});
}

// Over k[x]/(x^2) a module is free exactly when dim = 2 rank(x).
bool free_by_rank(Module const& m) { return m.dim() == 2 * oracle::rank(m.action(1)); }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("structure tables") {
    CHECK(validate_algebra(Algebra::ground(2)->table()).passed());
    CHECK(validate_algebra(dual_numbers()->table()).passed());

    AlgebraTable broken = dual_numbers()->table();
    broken.c(1, 1, 1) = 1;  // x^2 = x
    broken.c(1, 0, 1) = 0;  // x 1 = 0
    CHECK(validate_algebra(broken).refuted());
    CHECK_THROWS_AS(Algebra::make(broken), ValidationError);
  }

  TEST_CASE("non-associative table names the failing triple") {
    AlgebraTable t;
    t.p = 2;
    t.dim = 3;
    t.labels = {"1", "a", "b"};
    t.unit = {1, 0, 0};
    t.constants.assign(27, 0);
    for (std::size_t j = 0; j < 3; ++j) {
      t.c(0, j, j) = 1;
      t.c(j, 0, j) = 1;
    }
    t.c(1, 1, 2) = 1;  // a a = b
    t.c(2, 1, 1) = 1;  // b a = a, while a b = 0
    auto r = validate_algebra(t);
    CHECK(r.refuted());
    bool named = false;
    for (auto const& c : r.clauses) {
      if (c.name == "associativity" && c.detail.find("basis triple") != std::string::npos) named = true;
    }
    CHECK(named);
    CHECK_THROWS_WITH_AS(Algebra::make(t), doctest::Contains("basis triple"), ValidationError);
  }

  TEST_CASE("direct sums") {
    auto a = dual_numbers();
    auto x = simple(a);
    CHECK(find_isomorphism(direct_sum_module(x, Module::zero(a)), x));
    CHECK(direct_sum_module(Module::regular(a), Module::regular(a)).dim() == 4);
    CHECK_THROWS_AS(direct_sum_module(x, Module::regular(a, Side::right)), MismatchError);
  }

  TEST_CASE("hom dimensions agree with the brute-force count") {
    for (auto const& a : {dual_numbers(), Algebra::split_semisimple(2, 2, "S")}) {
      auto ms = enumerate_modules(a, 2);
      for (auto const& x : ms) {
        CHECK(hom_dim(Module::regular(a), x) == x.dim());
        CHECK(hom_dim(x, Module::zero(a)) == 0);
        for (auto const& y : ms) CHECK(hom_dim(x, y) == oracle::hom_dim(x, y));
      }
    }
    CHECK(hom_dim(simple(dual_numbers()), Module::regular(dual_numbers())) == 1);
  }

  TEST_CASE("hom from a bimodule") {
    auto ctx = fixture_context("E1");
    auto h = hom_over_algebra(ctx->n(), Module::regular(ctx->a()));
    CHECK(h.module.dim() == oracle::hom_dim(ctx->n().as_left(), Module::regular(ctx->a())));
    CHECK(h.module.dim() == 1);
    CHECK(hom_over_algebra(ctx->n(), Module::zero(ctx->a())).module.dim() == 0);
    auto self = hom_over_algebra(Bimodule::regular(ctx->a()), simple(ctx->a()));
    CHECK(self.module.dim() == 1);
  }

  TEST_CASE("tensor products") {
    auto ctx = fixture_context("E2");
    auto a = ctx->a();
    CHECK(tensor_over_algebra(ctx->m(), simple(a)).dim() == 1);
    CHECK(tensor_over_algebra(ctx->m(), Module::regular(a)).dim() == ctx->m().dim());
    CHECK(tensor_over_algebra(ctx->m(), Module::zero(a)).dim() == 0);
    auto t = tensor_over_algebra(ctx->m(), Module::regular(a));
    CHECK((t.projection * t.section).is_identity());
  }

  TEST_CASE("linear duals") {
    auto a = dual_numbers();
    CHECK(dual_module(Module::zero(a)).dim() == 0);
    auto d = dual_module(Module::regular(a));
    CHECK(d.dim() == a->dim());
    CHECK(d.side() == Side::right);
    CHECK(is_injective(d));
    auto e1a = fixture_context("E1")->a();
    for (auto const& x : enumerate_modules(e1a, 3)) {
      CHECK(find_isomorphism(dual_module(dual_module(x)), x));
    }
  }

  TEST_CASE("isomorphism search") {
    auto a = dual_numbers();
    auto x = simple(a);
    CHECK(find_isomorphism(x, x));
    CHECK_FALSE(find_isomorphism(x, Module::regular(a)));
    auto kk = direct_sum_module(x, x);
    CHECK_FALSE(find_isomorphism(Module::regular(a), kk));
    CHECK_FALSE(oracle::isomorphic(Module::regular(a), kk));
    for (auto const& m : enumerate_modules(a, 2)) {
      for (auto const& n : enumerate_modules(a, 2)) {
        CHECK(find_isomorphism(m, n).has_value() == oracle::isomorphic(m, n));
      }
    }
  }

  TEST_CASE("projective, injective and flat over a self-injective algebra") {
    auto a = dual_numbers();
    CHECK(is_projective(Module::regular(a)));
    CHECK(is_projective(Module::zero(a)));
    CHECK_FALSE(is_projective(simple(a)));
    CHECK(is_injective(dual_module(Module::regular(a))));
    CHECK(is_injective(Module::zero(a)));
    CHECK_FALSE(is_injective(simple(a)));
    CHECK(is_flat(Module::regular(a)));
    CHECK_FALSE(is_flat(simple(a)));
    for (auto const& m : enumerate_modules(a, 3)) {
      bool free = free_by_rank(m);
      CHECK(is_projective(m) == free);
      CHECK(is_injective(m) == free);
      CHECK(is_flat(m) == free);
    }
  }

  TEST_CASE("semisimple algebras make everything projective") {
    for (auto const& m : enumerate_modules(Algebra::split_semisimple(2, 2), 2)) {
      CHECK(is_projective(m));
      CHECK(is_injective(m));
    }
  }

  TEST_CASE("short exact sequences") {
    auto a = dual_numbers();
    auto ses = enumerate_short_exact_sequences(a, 2);
    bool split_seen = false, nonsplit_seen = false;
    for (auto const& s : ses) {
      CHECK(s.sub.dim() + s.quotient.dim() == s.middle.dim());
      CHECK(is_module_map(s.sub, s.middle, s.inclusion));
      CHECK(is_module_map(s.middle, s.quotient, s.projection));
      CHECK((s.projection * s.inclusion).is_zero());
      if (is_split(s)) split_seen = true;
      if (!is_split(s) && s.sub.dim() == 1 && s.quotient.dim() == 1) nonsplit_seen = true;
    }
    CHECK(split_seen);
    CHECK(nonsplit_seen);
    for (auto const& s : enumerate_short_exact_sequences(Algebra::split_semisimple(2, 2), 2)) {
      CHECK(is_split(s));
    }
  }
}
