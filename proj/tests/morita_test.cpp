#include "doctest.h"
#include "morita/detectors.hpp"
#include "morita/enumerate.hpp"
#include "morita/errors.hpp"
#include "morita/workspace.hpp"
#include "oracles.hpp"

using namespace morita;

namespace {

Module simple(AlgebraPtr const& a) {
  return Module(a, Side::left, 1, {Mat::identity(2, 1), Mat::zero(2, 1, 1)});
}

// (X, 0, 0, 0).
DeltaModule x_only(ContextPtr const& ctx, Module const& x) {
  auto zero_b = Module::zero(ctx->b());
  auto mx = tensor_over_algebra(ctx->m(), x).dim();
  return DeltaModule::make(ctx, Side::left, x, zero_b, Mat::zero(2, 0, mx), Mat::zero(2, x.dim(), 0));
}

DeltaModule regular_tuple(ContextPtr const& ctx) {
  return unpack(ctx, Module::regular(ctx->delta())).tuple;
}

}  // namespace

TEST_SUITE("morita") {
  TEST_CASE("Delta dimension is the sum of the four blocks") {
    for (auto const& name : {"E0", "E1", "E2", "E3"}) {
      auto ctx = fixture_context(name);
      CAPTURE(name);
      CHECK(ctx->delta()->dim() ==
            ctx->a()->dim() + ctx->b()->dim() + ctx->m().dim() + ctx->n().dim());
      CHECK(validate_algebra(ctx->delta()->table()).passed());
    }
    CHECK(fixture_context("E0")->delta()->dim() == 2);
    CHECK(fixture_context("E1")->delta()->dim() == 6);
  }

  TEST_CASE("a context with a nonzero pairing is rejected") {
    auto a = Algebra::ground(2);
    auto reg = Bimodule::regular(a);
    CHECK_THROWS_AS(MoritaContext::make(a, a, reg, reg), ValidationError);
  }

  TEST_CASE("pack and unpack") {
    auto e1 = fixture_context("E1");
    CHECK(pack(DeltaModule::zero(e1)).dim() == 0);
    CHECK(find_isomorphism(pack(regular_tuple(e1)), Module::regular(e1->delta())));
    for (auto const& dm : enumerate_delta_modules(e1, 2)) {
      CHECK(validate_tuple(dm).passed());
      auto z = pack(dm);
      auto u = unpack(e1, z);
      CHECK(delta_isomorphism(u.tuple, dm));
      CHECK(is_module_map(pack(u.tuple), z, u.witness));
    }
    for (auto const& dm : enumerate_delta_modules(e1, 1, Side::right)) {
      auto u = unpack(e1, pack(dm));
      CHECK(u.tuple.side() == Side::right);
      CHECK(delta_isomorphism(u.tuple, dm));
    }
  }

  TEST_CASE("character tuples") {
    for (auto const& name : {"E0", "E1", "E2"}) {
      CAPTURE(name);
      CHECK(check_character_tuples(fixture_context(name), 1).passed());
    }
    auto e2 = fixture_context("E2");
    auto d = delta_dual(x_only(e2, simple(e2->a())));
    CHECK(d.side() == Side::right);
    CHECK(d.dim() == 1);
  }

  TEST_CASE("projectivity, injectivity and flatness of tuples") {
    auto e2 = fixture_context("E2");
    auto reg = regular_tuple(e2);
    auto v = is_projective_delta(reg);
    CHECK(v.packed);
    CHECK(v.structural);
    REQUIRE(v.first);
    REQUIRE(v.second);
    CHECK(find_isomorphism(*v.first, Module::regular(e2->a())));
    CHECK(find_isomorphism(*v.second, Module::regular(e2->b())));
    CHECK(is_flat_delta(reg));

    auto k0 = x_only(e2, simple(e2->a()));
    CHECK_FALSE(is_projective_delta(k0).packed);
    CHECK_FALSE(is_projective_delta(k0).structural);
    CHECK_FALSE(is_flat_delta(k0));
    CHECK(is_projective_delta(DeltaModule::zero(e2)).structural);

    auto sum = delta_direct_sum(t_a(e2, Module::regular(e2->a())), t_b(e2, Module::regular(e2->b())));
    CHECK(is_flat_structural(sum));
    CHECK(is_projective_delta(sum).agree());

    for (auto const& name : {"E0", "E1", "E2"}) {
      CAPTURE(name);
      CHECK(check_detector_agreement(fixture_context(name), 1).passed());
    }
  }

  TEST_CASE("functors and adjunctions") {
    auto e2 = fixture_context("E2");
    auto a = e2->a();
    auto zero = t_a(e2, Module::zero(a));
    CHECK(zero.dim() == 0);
    auto ta = t_a(e2, Module::regular(a));
    CHECK(u_a(ta).dim() == a->dim());
    CHECK(check_adjunction(AdjointPair::t_u, e2, Module::regular(a), regular_tuple(e2)).passed());
    auto e1 = fixture_context("E1");
    auto tuples = enumerate_delta_modules(e1, 1);
    for (auto const& x : enumerate_modules(e1->a(), 1)) {
      for (auto const& v : tuples) {
        CHECK(check_adjunction(AdjointPair::t_u, e1, x, v).passed());
        CHECK(check_adjunction(AdjointPair::u_h, e1, x, v).passed());
      }
    }
  }

  TEST_CASE("tilde transforms round trip") {
    auto e1 = fixture_context("E1");
    for (auto const& dm : enumerate_delta_modules(e1, 2)) {
      auto tf = tilde_f(dm);
      auto tg = tilde_g(dm);
      CHECK(untilde_f(dm.view(), dm.x(), dm.y(), tf.matrix) == dm.f());
      CHECK(untilde_g(dm.view(), dm.x(), dm.y(), tg.matrix) == dm.g());
    }
  }
}
