#include "doctest.h"
#include "morita/errors.hpp"
#include "morita/gorenstein.hpp"
#include "morita/workspace.hpp"
#include "oracles.hpp"

using namespace morita;

namespace {

Module simple(AlgebraPtr const& a) {
  return Module(a, Side::left, 1, {Mat::identity(2, 1), Mat::zero(2, 1, 1)});
}

// (k, 0, 0, 0).
DeltaModule x_only_simple(ContextPtr const& ctx) {
  auto x = simple(ctx->a());
  auto mx = tensor_over_algebra(ctx->m(), x).dim();
  return DeltaModule::make(ctx, Side::left, x, Module::zero(ctx->b()), Mat::zero(2, 0, mx),
                           Mat::zero(2, x.dim(), 0));
}

}  // namespace

TEST_SUITE("gorenstein") {
  TEST_CASE("projective resolutions") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto reg = projective_resolution(Module::regular(a), 4);
    CHECK(reg.finite);
    CHECK(reg.length() == 0);
    auto k = projective_resolution(simple(a), 4);
    CHECK_FALSE(k.finite);
    REQUIRE(k.terms.size() == 4);
    for (auto const& t : k.terms) CHECK(find_isomorphism(t, Module::regular(a)));
    for (auto const& m : k.maps) {
      CHECK(oracle::rank(m) == 1);
      CHECK(oracle::nullity(m) == 1);
    }
    CHECK(projective_resolution(Module::zero(a), 4).terms.empty());
  }

  TEST_CASE("injective coresolutions") {
    auto a = Algebra::truncated_polynomial(2, 2);
    CHECK(injective_coresolution(Module::regular(a), 4).length() == 0);
    auto k = injective_coresolution(simple(a), 3);
    for (auto const& t : k.terms) CHECK(find_isomorphism(t, Module::regular(a)));
    CHECK_FALSE(injective_dimension(simple(a)));
    auto e1a = fixture_context("E1")->a();
    for (auto const& s : enumerate_modules_of_dim(e1a, 1)) CHECK(injective_dimension(s) == 0u);
  }

  TEST_CASE("complete resolution windows") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto c = complete_resolution_window(simple(a), 4);
    CHECK(c.lo == -4);
    CHECK(c.hi() == 3);
    CHECK(validate_complex(c).passed());
    CHECK(exact_inside(c));
    for (int d = c.lo; d < c.hi(); ++d) CHECK(oracle::rank(c.map(d)) == 1);
    CHECK_THROWS_AS(complete_resolution_window(simple(a), 0), ValidationError);

    auto proj = complete_resolution_window(Module::regular(a), 2);
    CHECK(exact_inside(proj));
  }

  TEST_CASE("windows over an algebra that is not self-injective") {
    auto e2 = fixture_context("E2");
    auto q = pack(t_b(e2, Module::regular(e2->b())));
    REQUIRE(is_projective(q));
    auto c = complete_resolution_window(q, 3);
    CHECK(exact_inside(c));
    CHECK(c.map(-1).is_identity());
    for (int d = c.lo; d <= c.hi(); ++d) {
      if (d != -1 && d != 0) CHECK(c.term(d).dim() == 0);
    }
    auto all = builtin_oracle(e2->delta(), Side::left, BuiltinClass::all);
    CHECK(is_gorenstein_projective_window(q, all, 3, 1).consistent);

    auto s = pack(x_only_simple(e2));
    CHECK_THROWS_AS(complete_resolution_window(s, 2), WindowError);
  }

  TEST_CASE("window check against flat and against all modules") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto flat = builtin_oracle(a, Side::left, BuiltinClass::flat);
    auto all = builtin_oracle(a, Side::left, BuiltinClass::all);
    auto good = is_gorenstein_projective_window(simple(a), flat, 4, 2);
    CHECK(good.consistent);
    CHECK(good.report.verdict == Verdict::consistent_up_to_bound);
    auto bad = is_gorenstein_projective_window(simple(a), all, 4, 2);
    CHECK_FALSE(bad.consistent);
    CHECK(bad.report.refuted());
    REQUIRE(bad.witness);
    CHECK(bad.witness->homology > 0);
    auto proj = is_gorenstein_projective_window(Module::regular(a), all, 2, 2);
    CHECK(proj.consistent);
  }

  TEST_CASE("hom complex homology matches a direct count") {
    auto a = Algebra::truncated_polynomial(2, 2);
    auto c = complete_resolution_window(simple(a), 2);
    auto h = hom_complex(c, simple(a));
    // Hom(A, k) is one-dimensional and every induced differential vanishes.
    for (auto d : h.dims) CHECK(d == 1);
    for (std::size_t i = 1; i + 1 < h.homology.size(); ++i) CHECK(h.homology[i] == 1);
    CHECK_FALSE(h.exact);
  }

  TEST_CASE("ding projectivity over a semisimple algebra") {
    auto e1a = fixture_context("E1")->a();
    for (auto const& s : enumerate_modules_of_dim(e1a, 1)) {
      CHECK(is_ding_projective_window(s, 2, 1).consistent);
    }
  }

  TEST_CASE("transport to Delta and back") {
    auto e2 = fixture_context("E2");
    auto cc = flat_fp_injective_classes(e2);
    auto k = simple(e2->a());
    auto fwd = check_gorenstein_transfer_forward(e2, Corner::a, k, cc, 4, 2);
    CHECK(fwd.report.verdict == Verdict::consistent_up_to_bound);
    CHECK(fwd.report.hypotheses.size() >= 1);
    REQUIRE(fwd.complex);
    REQUIRE(fwd.image);
    CHECK(delta_isomorphism(*fwd.image, t_a(e2, k)));
    auto back = check_gorenstein_transfer_backward(e2, Corner::a, *fwd.complex, *fwd.image, cc, 4, 2);
    CHECK(back.verdict == Verdict::consistent_up_to_bound);
    auto restricted = restrict_to_corner(*fwd.complex, Corner::a);
    CHECK(exact_inside(restricted));

    auto fwd_b = check_gorenstein_transfer_forward(e2, Corner::b, Module::regular(e2->b()), cc, 2, 1);
    CHECK(fwd_b.report.verdict == Verdict::consistent_up_to_bound);
  }

  TEST_CASE("ding transfer") {
    auto e2 = fixture_context("E2");
    auto r = check_ding_transfer(e2, Corner::a, simple(e2->a()), 4, 2);
    CHECK(r.verdict == Verdict::consistent_up_to_bound);
    CHECK(r.parameters.at("flat_test_tuples") > 0);
  }
}
