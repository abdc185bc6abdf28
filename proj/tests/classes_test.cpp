#include "doctest.h"
#include "morita/classes.hpp"
#include "morita/workspace.hpp"

using namespace morita;

namespace {

Module simple(AlgebraPtr const& a) {
  return Module(a, Side::left, 1, {Mat::identity(2, 1), Mat::zero(2, 1, 1)});
}

DeltaModule x_only(ContextPtr const& ctx, Module const& x) {
  auto mx = tensor_over_algebra(ctx->m(), x).dim();
  return DeltaModule::make(ctx, Side::left, x, Module::zero(ctx->b()), Mat::zero(2, 0, mx),
                           Mat::zero(2, x.dim(), 0));
}

}  // namespace

TEST_SUITE("classes") {
  TEST_CASE("builtin oracles") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto proj = builtin_oracle(a, Side::left, BuiltinClass::projective);
    auto flat = builtin_oracle(a, Side::left, BuiltinClass::flat);
    auto all = builtin_oracle(a, Side::left, BuiltinClass::all);
    CHECK(proj.contains(Module::regular(a)));
    CHECK_FALSE(flat.contains(simple(a)));
    for (auto const& m : all.sample(2)) CHECK(all.contains(m));
    for (auto const& o : builtin_oracles(a, Side::left)) CHECK(check_oracle(o, 2).passed());
    CHECK(parse_builtin_class("fp-injective") == BuiltinClass::fp_injective);
    CHECK_FALSE(parse_builtin_class("nonsense"));
  }

  TEST_CASE("list oracles are closed under isomorphism") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto o = list_oracle("L", a, Side::left, {simple(a)});
    CHECK(o.contains(Module::zero(a)));
    CHECK(o.contains(simple(a)));
    CHECK_FALSE(o.contains(Module::regular(a)));
    CHECK(check_oracle(o, 2).passed());
  }

  TEST_CASE("tuple classes") {
    auto e2 = fixture_context("E2");
    auto a = e2->a();
    auto b = e2->b();
    auto all_a = builtin_oracle(a, Side::left, BuiltinClass::all);
    auto all_b = builtin_oracle(b, Side::left, BuiltinClass::all);
    auto proj_a = builtin_oracle(a, Side::left, BuiltinClass::projective);
    auto proj_b = builtin_oracle(b, Side::left, BuiltinClass::projective);
    CHECK(in_componentwise_class(DeltaModule::zero(e2), proj_a, proj_b));
    CHECK(in_monic_class(DeltaModule::zero(e2), proj_a, proj_b));
    CHECK(in_epic_class(DeltaModule::zero(e2), proj_a, proj_b));
    CHECK(in_componentwise_class(t_a(e2, Module::regular(a)), all_a, all_b));
    CHECK_FALSE(in_componentwise_class(x_only(e2, simple(a)), proj_a, all_b));
    CHECK_FALSE(in_monic_class(x_only(e2, simple(a)), proj_a, proj_b));
    auto unit = unpack(e2, Module::regular(e2->delta())).tuple;
    CHECK(in_monic_class(unit, proj_a, proj_b));
    CHECK(parse_delta_class("B") == DeltaClass::monic);
    CHECK(parse_delta_class("J") == DeltaClass::epic);
    CHECK(parse_delta_class("A") == DeltaClass::componentwise);
  }

  TEST_CASE("functors carry component membership to tuple classes") {
    for (auto const& name : {"E1", "E2"}) {
      auto ctx = fixture_context(name);
      CAPTURE(name);
      CHECK(check_functor_class_correspondence(ctx, flat_fp_injective_classes(ctx), 2).passed());
    }
    auto e2 = fixture_context("E2");
    auto flat_a = builtin_oracle(e2->a(), Side::left, BuiltinClass::flat);
    auto flat_b = builtin_oracle(e2->b(), Side::left, BuiltinClass::flat);
    for (auto const& x : enumerate_modules(e2->a(), 2)) {
      CHECK(in_monic_class(t_a(e2, x), flat_a, flat_b) == flat_a.contains(x));
      CHECK(in_epic_class(h_a(e2, x), flat_a, flat_b) == flat_a.contains(x));
    }
  }

  TEST_CASE("duality pairs of modules") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto flat = builtin_oracle(a, Side::left, BuiltinClass::flat);
    auto fpinj = builtin_oracle(a, Side::right, BuiltinClass::fp_injective);
    auto all_l = builtin_oracle(a, Side::left, BuiltinClass::all);
    auto all_r = builtin_oracle(a, Side::right, BuiltinClass::all);
    CHECK(verify_duality_pair({all_l, all_r, 2}).passed());
    CHECK(check_complete({all_l, all_r, 2}).passed());
    CHECK(verify_duality_pair({flat, fpinj, 3}).passed());
    auto broken = verify_duality_pair({flat, all_r, 2});
    CHECK(broken.refuted());
    CHECK_FALSE(broken.witnesses.empty());

    auto e1a = fixture_context("E1")->a();
    CHECK(verify_duality_pair({builtin_oracle(e1a, Side::left, BuiltinClass::flat),
                               builtin_oracle(e1a, Side::right, BuiltinClass::fp_injective), 3})
              .passed());
  }

  TEST_CASE("uniqueness of the second half") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto flat = builtin_oracle(a, Side::left, BuiltinClass::flat);
    auto inj = builtin_oracle(a, Side::right, BuiltinClass::injective);
    auto fpinj = builtin_oracle(a, Side::right, BuiltinClass::fp_injective);
    auto all_r = builtin_oracle(a, Side::right, BuiltinClass::all);
    CHECK(check_uniqueness(flat, inj, fpinj, 2).passed());
    CHECK(check_uniqueness(flat, inj, inj, 2).passed());
    auto bad = check_uniqueness(flat, inj, all_r, 2);
    CHECK(bad.refuted());
    CHECK_FALSE(bad.witnesses.empty());
  }

  TEST_CASE("transfer of duality pairs") {
    for (auto const& name : {"E0", "E1", "E2"}) {
      auto ctx = fixture_context(name);
      auto cc = flat_fp_injective_classes(ctx);
      CAPTURE(name);
      CHECK(check_duality_transfer(ctx, cc, 2).passed());
      CHECK(check_symmetric_transfer(ctx, cc, 1).passed());
    }
  }

  TEST_CASE("perfect pairs and the componentwise condition") {
    for (auto const& name : {"E1", "E2"}) {
      auto ctx = fixture_context(name);
      auto cc = flat_fp_injective_classes(ctx);
      CAPTURE(name);
      auto r = check_perfect_transfer(ctx, cc, 2);
      CHECK(r.passed());
      CHECK(r.parameters.at("componentwise_perfect") == 1);
      CHECK(check_complete_transfer(ctx, cc, 2).passed());
    }
    auto e3 = fixture_context("E3");
    auto cc = flat_fp_injective_classes(e3);
    CHECK_FALSE(cc.d1.contains(e3->m().as_left()));
    auto comp = check_delta_perfect_pair(componentwise_pair(e3, cc, 2));
    CHECK(comp.refuted());
    CHECK_FALSE(comp.witnesses.empty());
    auto r = check_perfect_transfer(e3, cc, 2);
    CHECK(r.passed());
    CHECK(r.parameters.at("m_in_d1") == 0);
    CHECK(r.parameters.at("componentwise_perfect") == 0);
  }

  TEST_CASE("injective right tuples") {
    CHECK(check_fp_injective_characterization(fixture_context("E1"), 2).passed());
    CHECK(check_fp_injective_characterization(fixture_context("E2"), 1).passed());
  }

  TEST_CASE("uniqueness over Delta") {
    for (auto const& name : {"E1", "E2"}) {
      CAPTURE(name);
      CHECK(check_delta_uniqueness(fixture_context(name), 1).passed());
    }
  }
}
