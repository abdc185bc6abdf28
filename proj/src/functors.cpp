#include "morita/functors.hpp"

#include <functional>

#include "morita/errors.hpp"

namespace morita {

namespace {

void require_left_over(ContextPtr const& ctx, Module const& m, AlgebraPtr const& alg,
                       char const* what) {
  if (m.side() != Side::left || !same_algebra(m.algebra(), alg)) {
    throw MismatchError(std::string(what) + ": expected a left module over " + alg->name() +
                        " in context " + ctx->name());
  }
}

// Columns of the evaluation blocks: block j sends phi_t to phi_t(v_j).
std::vector<Mat> evaluation_blocks(HomModule const& hom, std::size_t bimodule_dim,
                                   std::size_t target_dim, std::uint32_t p) {
  std::vector<Mat> blocks;
  for (std::size_t j = 0; j < bimodule_dim; ++j) {
    Mat b(p, target_dim, hom.basis.size());
    for (std::size_t t = 0; t < hom.basis.size(); ++t) b.set_block(0, t, hom.basis[t].col(j));
    blocks.push_back(std::move(b));
  }
  return blocks;
}

// Hom(bimodule, a) : Hom(bimodule, src) -> Hom(bimodule, dst) in hom coordinates.
Mat hom_postcompose(HomModule const& src, HomModule const& dst, Mat const& a) {
  Mat out(a.prime(), dst.basis.size(), src.basis.size());
  for (std::size_t t = 0; t < src.basis.size(); ++t) {
    out.set_block(0, t, dst.coordinates(a * src.basis[t]));
  }
  return out;
}

// x -> (v_i -> blocks[i] x) in hom coordinates.
Mat tilde_matrix(HomModule const& hom, std::vector<Mat> const& blocks, std::size_t source_dim,
                 std::size_t target_dim, std::uint32_t p) {
  Mat out(p, hom.basis.size(), source_dim);
  for (std::size_t c = 0; c < source_dim; ++c) {
    Mat phi(p, target_dim, blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) phi.set_block(0, i, blocks[i].col(c));
    out.set_block(0, c, hom.coordinates(phi));
  }
  return out;
}

Mat untilde(Bimodule const& bimod, Module const& source, Module const& target, Mat const& phi,
            char const* what) {
  auto hom = hom_over_algebra(bimod, target);
  if (!is_module_map(source, hom.module, phi)) {
    throw ValidationError(std::string(what) + ": input is not a module map into the Hom module");
  }
  auto p = source.prime();
  std::vector<Mat> blocks(bimod.dim(), Mat(p, target.dim(), source.dim()));
  for (std::size_t c = 0; c < source.dim(); ++c) {
    Mat value = hom.element(phi.col(c));
    for (std::size_t i = 0; i < bimod.dim(); ++i) blocks[i].set_block(0, c, value.col(i));
  }
  auto t = tensor_over_algebra(bimod, source);
  return hstack(blocks, p, target.dim()) * t.section;
}

}  // namespace

DeltaModule t_a(ContextPtr ctx, Module const& x) {
  require_left_over(ctx, x, ctx->a(), "T_A");
  auto p = ctx->prime();
  auto mx = tensor_over_algebra(ctx->m(), x);
  auto q = mx.dim();
  Module y = mx.module;
  auto ny = tensor_over_algebra(ctx->n(), y);
  return DeltaModule::make(std::move(ctx), Side::left, x, std::move(y), Mat::identity(p, q),
                           Mat(p, x.dim(), ny.dim()));
}

DeltaModule t_b(ContextPtr ctx, Module const& y) {
  require_left_over(ctx, y, ctx->b(), "T_B");
  auto p = ctx->prime();
  auto ny = tensor_over_algebra(ctx->n(), y);
  auto q = ny.dim();
  Module x = ny.module;
  auto mx = tensor_over_algebra(ctx->m(), x);
  return DeltaModule::make(std::move(ctx), Side::left, std::move(x), y, Mat(p, y.dim(), mx.dim()),
                           Mat::identity(p, q));
}

DeltaModuleMap t_a_map(ContextPtr ctx, ModuleMap const& a) {
  auto src = t_a(ctx, a.source);
  auto dst = t_a(ctx, a.target);
  Mat b = tensor_map(ctx->m(), src.mx(), dst.mx(), a.matrix);
  return DeltaModuleMap::make(std::move(src), std::move(dst), a.matrix, std::move(b));
}

DeltaModuleMap t_b_map(ContextPtr ctx, ModuleMap const& b) {
  auto src = t_b(ctx, b.source);
  auto dst = t_b(ctx, b.target);
  Mat a = tensor_map(ctx->n(), src.ny(), dst.ny(), b.matrix);
  return DeltaModuleMap::make(std::move(src), std::move(dst), std::move(a), b.matrix);
}

Module u_a(DeltaModule const& dm) { return dm.component_x(); }
Module u_b(DeltaModule const& dm) { return dm.component_y(); }

DeltaModule h_a(ContextPtr ctx, Module const& x) {
  require_left_over(ctx, x, ctx->a(), "H_A");
  auto p = ctx->prime();
  auto hom = hom_over_algebra(ctx->n(), x);
  auto dh = hom.basis.size();
  auto g = evaluation_blocks(hom, ctx->n().dim(), x.dim(), p);
  std::vector<Mat> f(ctx->m().dim(), Mat(p, dh, x.dim()));
  return DeltaModule::from_blocks(std::move(ctx), Side::left, x, hom.module, f, g);
}

DeltaModule h_b(ContextPtr ctx, Module const& y) {
  require_left_over(ctx, y, ctx->b(), "H_B");
  auto p = ctx->prime();
  auto hom = hom_over_algebra(ctx->m(), y);
  auto dh = hom.basis.size();
  auto f = evaluation_blocks(hom, ctx->m().dim(), y.dim(), p);
  std::vector<Mat> g(ctx->n().dim(), Mat(p, dh, y.dim()));
  return DeltaModule::from_blocks(std::move(ctx), Side::left, hom.module, y, f, g);
}

DeltaModuleMap h_a_map(ContextPtr ctx, ModuleMap const& a) {
  auto src = hom_over_algebra(ctx->n(), a.source);
  auto dst = hom_over_algebra(ctx->n(), a.target);
  Mat b = hom_postcompose(src, dst, a.matrix);
  return DeltaModuleMap::make(h_a(ctx, a.source), h_a(ctx, a.target), a.matrix, std::move(b));
}

DeltaModuleMap h_b_map(ContextPtr ctx, ModuleMap const& b) {
  auto src = hom_over_algebra(ctx->m(), b.source);
  auto dst = hom_over_algebra(ctx->m(), b.target);
  Mat a = hom_postcompose(src, dst, b.matrix);
  return DeltaModuleMap::make(h_b(ctx, b.source), h_b(ctx, b.target), std::move(a), b.matrix);
}

EvaluationMap evaluation_a(ContextPtr ctx, Module const& x) {
  auto hom = hom_over_algebra(ctx->n(), x);
  auto source = tensor_over_algebra(ctx->n(), hom.module);
  auto blocks = evaluation_blocks(hom, ctx->n().dim(), x.dim(), ctx->prime());
  Mat m = hstack(blocks, ctx->prime(), x.dim()) * source.section;
  return EvaluationMap{std::move(source), std::move(hom), std::move(m)};
}

EvaluationMap evaluation_b(ContextPtr ctx, Module const& y) {
  auto hom = hom_over_algebra(ctx->m(), y);
  auto source = tensor_over_algebra(ctx->m(), hom.module);
  auto blocks = evaluation_blocks(hom, ctx->m().dim(), y.dim(), ctx->prime());
  Mat m = hstack(blocks, ctx->prime(), y.dim()) * source.section;
  return EvaluationMap{std::move(source), std::move(hom), std::move(m)};
}

TildeMap tilde_f(DeltaModule const& dm) {
  auto hom = hom_over_algebra(dm.view()->m(), dm.y());
  Mat m = tilde_matrix(hom, dm.f_blocks(), dm.x().dim(), dm.y().dim(), dm.view()->prime());
  return TildeMap{std::move(hom), std::move(m)};
}

TildeMap tilde_g(DeltaModule const& dm) {
  auto hom = hom_over_algebra(dm.view()->n(), dm.x());
  Mat m = tilde_matrix(hom, dm.g_blocks(), dm.y().dim(), dm.x().dim(), dm.view()->prime());
  return TildeMap{std::move(hom), std::move(m)};
}

Mat untilde_f(ContextPtr const& view, Module const& x, Module const& y, Mat const& phi) {
  return untilde(view->m(), x, y, phi, "untilde f");
}

Mat untilde_g(ContextPtr const& view, Module const& x, Module const& y, Mat const& psi) {
  return untilde(view->n(), y, x, psi, "untilde g");
}

std::string to_string(AdjointPair pair) {
  return pair == AdjointPair::t_u ? "(T_A, U_A)" : "(U_A, H_A)";
}

CheckReport check_adjunction(AdjointPair pair, ContextPtr ctx, Module const& x,
                             DeltaModule const& v) {
  CheckReport r;
  r.check = "adjunction " + to_string(pair);
  if (v.view() != ctx) throw MismatchError("adjunction: tuple is not a left tuple over the context");
  auto p = ctx->prime();

  // Lift of a component map a to the unique partner b.
  std::function<Mat(Mat const&)> lift;
  DeltaModule fixed = pair == AdjointPair::t_u ? t_a(ctx, x) : h_a(ctx, x);
  std::vector<Mat> a_basis;
  std::vector<std::pair<Mat, Mat>> delta_basis;
  if (pair == AdjointPair::t_u) {
    a_basis = hom_basis(x, v.x());
    delta_basis = delta_hom_basis(fixed, v);
    lift = [&](Mat const& a) {
      return v.f() * tensor_map(ctx->m(), fixed.mx(), v.mx(), a);
    };
  } else {
    a_basis = hom_basis(v.x(), x);
    delta_basis = delta_hom_basis(v, fixed);
    auto hom = hom_over_algebra(ctx->n(), x);
    lift = [&, hom](Mat const& a) {
      Mat b(p, hom.basis.size(), v.y().dim());
      for (std::size_t c = 0; c < v.y().dim(); ++c) {
        Mat phi(p, x.dim(), ctx->n().dim());
        for (std::size_t i = 0; i < ctx->n().dim(); ++i) {
          phi.set_block(0, i, a * v.g_blocks()[i].col(c));
        }
        b.set_block(0, c, hom.coordinates(phi));
      }
      return b;
    };
  }
  r.parameters["hom_delta_dim"] = static_cast<long long>(delta_basis.size());
  r.parameters["hom_component_dim"] = static_cast<long long>(a_basis.size());
  r.add("dimensions agree", delta_basis.size() == a_basis.size(),
        std::to_string(delta_basis.size()) + " vs " + std::to_string(a_basis.size()));

  bool lifts_ok = true;
  std::vector<Mat> packed;
  for (auto const& a : a_basis) {
    Mat b = lift(a);
    bool ok = pair == AdjointPair::t_u ? is_delta_map(fixed, v, a, b) : is_delta_map(v, fixed, a, b);
    lifts_ok &= ok;
    packed.push_back(block_diag({a, b}, p).flatten());
  }
  r.add("every component map lifts to a tuple map", lifts_ok);
  std::size_t rows = packed.empty() ? 0 : packed.front().rows();
  std::size_t lifted_rank = packed.empty() ? 0 : rank(hstack(packed, p, rows));
  r.add("lifts are independent and span", lifted_rank == a_basis.size() &&
                                               lifted_rank == delta_basis.size());
  bool restrict_ok = true;
  for (auto const& [a, b] : delta_basis) restrict_ok &= lift(a) == b;
  r.add("restriction then lift is the identity", restrict_ok);
  return r;
}

}  // namespace morita
