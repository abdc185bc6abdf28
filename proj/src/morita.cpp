#include "morita/morita.hpp"

#include <sstream>

#include "morita/errors.hpp"

namespace morita {

namespace {

TensorProduct checked_tensor(Bimodule const& left, Bimodule const& right, char const* what) {
  if (!same_algebra(left.right_algebra(), right.left_algebra())) {
    throw ValidationError(std::string("context: ") + what + " is not defined over a common algebra");
  }
  auto t = tensor_over_algebra(left, right.as_left());
  if (t.dim() != 0) {
    throw ValidationError(std::string("context: ") + what + " has dimension " +
                          std::to_string(t.dim()) + ", expected 0");
  }
  return t;
}

}  // namespace

MoritaContext::MoritaContext(AlgebraPtr a, AlgebraPtr b, Bimodule m, Bimodule n,
                             std::string name)
    : a_(std::move(a)),
      b_(std::move(b)),
      m_(std::move(m)),
      n_(std::move(n)),
      name_(std::move(name)),
      mn_(checked_tensor(m_, n_, "M (x)_A N")),
      nm_(checked_tensor(n_, m_, "N (x)_B M")) {
  if (!same_algebra(m_.left_algebra(), b_) || !same_algebra(m_.right_algebra(), a_)) {
    throw ValidationError("context: M must be a (B, A)-bimodule");
  }
  if (!same_algebra(n_.left_algebra(), a_) || !same_algebra(n_.right_algebra(), b_)) {
    throw ValidationError("context: N must be an (A, B)-bimodule");
  }
  delta_ = build_delta_algebra(*this);
}

ContextPtr MoritaContext::make(AlgebraPtr a, AlgebraPtr b, Bimodule m, Bimodule n,
                               std::string name) {
  if (a->prime() != b->prime()) throw MismatchError("context: algebras over different fields");
  return ContextPtr(
      new MoritaContext(std::move(a), std::move(b), std::move(m), std::move(n), std::move(name)));
}

ContextPtr MoritaContext::opposite() const {
  if (auto back = opposite_of_.lock()) return back;
  std::call_once(opposite_once_, [this] {
    std::shared_ptr<MoritaContext> op(new MoritaContext(
        a_->opposite(), b_->opposite(), n_.opposite(), m_.opposite(), name_ + "^op"));
    op->opposite_of_ = weak_from_this();
    opposite_ = std::move(op);
  });
  return opposite_;
}

AlgebraPtr build_delta_algebra(MoritaContext const& ctx) {
  auto const& A = *ctx.a();
  auto const& B = *ctx.b();
  auto const& M = ctx.m();
  auto const& N = ctx.n();
  std::size_t oa = ctx.offset_a(), on = ctx.offset_n(), om = ctx.offset_m(), ob = ctx.offset_b();
  std::size_t d = ob + B.dim();
  AlgebraTable t;
  t.p = ctx.prime();
  t.dim = d;
  t.constants.assign(d * d * d, 0);
  t.unit.assign(d, 0);
  for (std::size_t i = 0; i < A.dim(); ++i) t.unit[oa + i] = A.unit()[i];
  for (std::size_t i = 0; i < B.dim(); ++i) t.unit[ob + i] = B.unit()[i];

  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      for (std::size_t k = 0; k < A.dim(); ++k) t.c(oa + i, oa + j, oa + k) = A.constant(i, j, k);
    }
    // a n
    for (std::size_t j = 0; j < N.dim(); ++j) {
      for (std::size_t k = 0; k < N.dim(); ++k) t.c(oa + i, on + j, on + k) = N.left_actions()[i](k, j);
    }
    // m a
    for (std::size_t j = 0; j < M.dim(); ++j) {
      for (std::size_t k = 0; k < M.dim(); ++k) t.c(om + j, oa + i, om + k) = M.right_actions()[i](k, j);
    }
  }
  for (std::size_t i = 0; i < B.dim(); ++i) {
    for (std::size_t j = 0; j < B.dim(); ++j) {
      for (std::size_t k = 0; k < B.dim(); ++k) t.c(ob + i, ob + j, ob + k) = B.constant(i, j, k);
    }
    // n b
    for (std::size_t j = 0; j < N.dim(); ++j) {
      for (std::size_t k = 0; k < N.dim(); ++k) t.c(on + j, ob + i, on + k) = N.right_actions()[i](k, j);
    }
    // b m
    for (std::size_t j = 0; j < M.dim(); ++j) {
      for (std::size_t k = 0; k < M.dim(); ++k) t.c(ob + i, om + j, om + k) = M.left_actions()[i](k, j);
    }
  }
  for (std::size_t i = 0; i < A.dim(); ++i) t.labels.push_back("a." + A.label(i));
  for (std::size_t i = 0; i < N.dim(); ++i) t.labels.push_back("n" + std::to_string(i));
  for (std::size_t i = 0; i < M.dim(); ++i) t.labels.push_back("m" + std::to_string(i));
  for (std::size_t i = 0; i < B.dim(); ++i) t.labels.push_back("b." + B.label(i));
  t.name = (ctx.name().empty() ? std::string("ctx") : ctx.name()) + ".Delta";
  return Algebra::make(std::move(t));
}

// ---------------------------------------------------------------------------
// Tuples

namespace {

ContextPtr view_of(ContextPtr const& home, Side side) {
  return side == Side::left ? home : home->opposite();
}

// Right components may be passed on their natural side; the view stores the
// left module over the opposite algebra.
Module to_view(Module m) {
  return m.side() == Side::right ? m.reinterpret_opposite() : std::move(m);
}

}  // namespace

DeltaModule::DeltaModule(ContextPtr home, Side side, Module x, Module y, TensorProduct mx,
                         TensorProduct ny)
    : home_(std::move(home)),
      view_(view_of(home_, side)),
      side_(side),
      x_(std::move(x)),
      y_(std::move(y)),
      mx_(std::move(mx)),
      ny_(std::move(ny)) {}

DeltaModule DeltaModule::make(ContextPtr home, Side side, Module x, Module y, Mat f, Mat g) {
  auto view = view_of(home, side);
  x = to_view(std::move(x));
  y = to_view(std::move(y));
  if (!same_algebra(x.algebra(), view->a()) || !same_algebra(y.algebra(), view->b())) {
    throw MismatchError("tuple components are not over the context's algebras");
  }
  auto mx = tensor_over_algebra(view->m(), x);
  auto ny = tensor_over_algebra(view->n(), y);
  if (!is_module_map(mx.module, y, f)) {
    throw ValidationError("tuple: f is not a module map M (x) X -> Y");
  }
  if (!is_module_map(ny.module, x, g)) {
    throw ValidationError("tuple: g is not a module map N (x) Y -> X");
  }
  DeltaModule dm(std::move(home), side, std::move(x), std::move(y), std::move(mx),
                 std::move(ny));
  dm.f_ = std::move(f);
  dm.g_ = std::move(g);
  dm.fill_blocks();
  return dm;
}

void DeltaModule::fill_blocks() {
  auto dx = x_.dim(), dy = y_.dim();
  f_blocks_.clear();
  g_blocks_.clear();
  for (std::size_t i = 0; i < view_->m().dim(); ++i) {
    f_blocks_.push_back(f_ * mx_.projection.block(0, i * dx, mx_.dim(), dx));
  }
  for (std::size_t j = 0; j < view_->n().dim(); ++j) {
    g_blocks_.push_back(g_ * ny_.projection.block(0, j * dy, ny_.dim(), dy));
  }
}

DeltaModule DeltaModule::from_blocks(ContextPtr home, Side side, Module x, Module y,
                                     std::vector<Mat> const& f_blocks,
                                     std::vector<Mat> const& g_blocks) {
  auto view = view_of(home, side);
  x = to_view(std::move(x));
  y = to_view(std::move(y));
  if (!same_algebra(x.algebra(), view->a()) || !same_algebra(y.algebra(), view->b())) {
    throw MismatchError("tuple components are not over the context's algebras");
  }
  auto p = view->prime();
  auto dx = x.dim(), dy = y.dim();
  if (f_blocks.size() != view->m().dim() || g_blocks.size() != view->n().dim()) {
    throw ValidationError("tuple: expected one f block per basis vector of M and one g block per basis vector of N");
  }
  for (auto const& b : f_blocks) {
    if (b.rows() != dy || b.cols() != dx) throw ValidationError("tuple: f block has the wrong shape");
  }
  for (auto const& b : g_blocks) {
    if (b.rows() != dx || b.cols() != dy) throw ValidationError("tuple: g block has the wrong shape");
  }
  auto mx = tensor_over_algebra(view->m(), x);
  auto ny = tensor_over_algebra(view->n(), y);
  Mat hf = hstack(f_blocks, p, dy);
  Mat hg = hstack(g_blocks, p, dx);
  Mat f = hf * mx.section;
  Mat g = hg * ny.section;
  if (!(f * mx.projection == hf)) {
    throw ValidationError("tuple: f blocks are not balanced over A");
  }
  if (!(g * ny.projection == hg)) {
    throw ValidationError("tuple: g blocks are not balanced over B");
  }
  return make(std::move(home), side, std::move(x), std::move(y), std::move(f), std::move(g));
}

DeltaModule DeltaModule::zero(ContextPtr home, Side side) {
  auto view = view_of(home, side);
  auto p = view->prime();
  return make(std::move(home), side, Module::zero(view->a()), Module::zero(view->b()),
              Mat(p, 0, 0), Mat(p, 0, 0));
}

Module DeltaModule::component_x() const {
  return side_ == Side::left ? x_ : x_.reinterpret_opposite();
}

Module DeltaModule::component_y() const {
  return side_ == Side::left ? y_ : y_.reinterpret_opposite();
}

std::string DeltaModule::describe() const {
  std::ostringstream os;
  os << to_string(side_) << " tuple over " << home_->name() << ": dim X = " << x_.dim()
     << ", dim Y = " << y_.dim() << ", f = " << f_.to_string() << ", g = " << g_.to_string();
  return os.str();
}

CheckReport validate_tuple(DeltaModule const& dm) {
  CheckReport r;
  r.check = "validate_tuple";
  r.add("f is a module map", is_module_map(dm.mx().module, dm.y(), dm.f()));
  r.add("g is a module map", is_module_map(dm.ny().module, dm.x(), dm.g()));
  auto packed = pack_view(dm);
  auto v = validate_module(*packed.algebra(), Side::left, packed.dim(), packed.actions());
  r.add("packed module validates", v.passed(),
        v.passed() ? std::string() : v.clauses.back().detail);
  return r;
}

bool is_delta_map(DeltaModule const& s, DeltaModule const& t, Mat const& a, Mat const& b) {
  if (s.view() != t.view()) return false;
  if (!is_module_map(s.x(), t.x(), a) || !is_module_map(s.y(), t.y(), b)) return false;
  auto const& ctx = *s.view();
  Mat one_a = tensor_map(ctx.m(), s.mx(), t.mx(), a);
  Mat one_b = tensor_map(ctx.n(), s.ny(), t.ny(), b);
  return b * s.f() == t.f() * one_a && a * s.g() == t.g() * one_b;
}

DeltaModuleMap DeltaModuleMap::make(DeltaModule source, DeltaModule target, Mat a, Mat b) {
  if (!is_delta_map(source, target, a, b)) {
    throw ValidationError("pair (a, b) is not a morphism of tuples");
  }
  return DeltaModuleMap{std::move(source), std::move(target), std::move(a), std::move(b)};
}

Mat DeltaModuleMap::packed() const {
  return block_diag({a, b}, source.view()->prime());
}

Module pack_view(DeltaModule const& dm) {
  auto const& ctx = *dm.view();
  auto p = ctx.prime();
  auto dx = dm.x().dim(), dy = dm.y().dim(), d = dx + dy;
  std::vector<Mat> acts;
  for (auto const& a : dm.x().actions()) acts.push_back(block_diag({a, Mat(p, dy, dy)}, p));
  for (auto const& g : dm.g_blocks()) {
    Mat act(p, d, d);
    act.set_block(0, dx, g);
    acts.push_back(std::move(act));
  }
  for (auto const& f : dm.f_blocks()) {
    Mat act(p, d, d);
    act.set_block(dx, 0, f);
    acts.push_back(std::move(act));
  }
  for (auto const& b : dm.y().actions()) acts.push_back(block_diag({Mat(p, dx, dx), b}, p));
  return Module(Module::Trusted{}, ctx.delta(), Side::left, d, std::move(acts));
}

namespace {

// Position in the opposite context's Delta basis of each home basis element.
std::vector<std::size_t> home_to_view_index(MoritaContext const& home) {
  auto const& view = *home.opposite();
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < home.a()->dim(); ++i) perm.push_back(view.offset_a() + i);
  for (std::size_t i = 0; i < home.n().dim(); ++i) perm.push_back(view.offset_m() + i);
  for (std::size_t i = 0; i < home.m().dim(); ++i) perm.push_back(view.offset_n() + i);
  for (std::size_t i = 0; i < home.b()->dim(); ++i) perm.push_back(view.offset_b() + i);
  return perm;
}

}  // namespace

Module pack(DeltaModule const& dm) {
  if (dm.side() == Side::left) return pack_view(dm);
  auto left = pack_view(dm);
  std::vector<Mat> acts;
  for (auto idx : home_to_view_index(*dm.home())) acts.push_back(left.action(idx));
  return Module(Module::Trusted{}, dm.home()->delta(), Side::right, left.dim(), std::move(acts));
}

Unpacked unpack(ContextPtr home, Module const& z) {
  if (!same_algebra(z.algebra(), home->delta())) {
    throw MismatchError("unpack: module is not over the context's Delta");
  }
  Side side = z.side();
  auto view = view_of(home, side);
  auto p = home->prime();
  auto d = z.dim();
  std::vector<Mat> acts(z.actions().size(), Mat(p, d, d));
  if (side == Side::left) {
    acts = z.actions();
  } else {
    auto perm = home_to_view_index(*home);
    for (std::size_t h = 0; h < perm.size(); ++h) acts[perm[h]] = z.action(h);
  }
  Mat e(p, d, d);
  for (std::size_t i = 0; i < view->a()->dim(); ++i) {
    e.add_scaled(acts[view->offset_a() + i], view->a()->unit()[i]);
  }
  Mat ex = image_basis(e).transpose();
  Mat ey = image_basis(Mat::identity(p, d) - e).transpose();
  auto dx = ex.cols(), dy = ey.cols();
  if (dx + dy != d) throw ValidationError("unpack: unit of A does not act as an idempotent");
  Mat basis = hstack({ex, ey}, p, d);
  Mat inv = *inverse(basis);
  std::vector<Mat> conj;
  for (auto const& a : acts) conj.push_back(inv * a * basis);

  std::vector<Mat> xa, yb, fb, gb;
  for (std::size_t i = 0; i < view->a()->dim(); ++i) {
    xa.push_back(conj[view->offset_a() + i].block(0, 0, dx, dx));
  }
  for (std::size_t i = 0; i < view->b()->dim(); ++i) {
    yb.push_back(conj[view->offset_b() + i].block(dx, dx, dy, dy));
  }
  for (std::size_t j = 0; j < view->n().dim(); ++j) {
    gb.push_back(conj[view->offset_n() + j].block(0, dx, dx, dy));
  }
  for (std::size_t i = 0; i < view->m().dim(); ++i) {
    fb.push_back(conj[view->offset_m() + i].block(dx, 0, dy, dx));
  }
  Module x(view->a(), Side::left, dx, std::move(xa));
  Module y(view->b(), Side::left, dy, std::move(yb));
  auto tuple = DeltaModule::from_blocks(std::move(home), side, std::move(x), std::move(y), fb, gb);
  return Unpacked{std::move(tuple), std::move(basis)};
}

DeltaModule delta_dual(DeltaModule const& dm) {
  Module x = dual_module(dm.x()).reinterpret_opposite();
  Module y = dual_module(dm.y()).reinterpret_opposite();
  std::vector<Mat> f, g;
  for (auto const& b : dm.g_blocks()) f.push_back(b.transpose());
  for (auto const& b : dm.f_blocks()) g.push_back(b.transpose());
  return DeltaModule::from_blocks(dm.home(), flip(dm.side()), std::move(x), std::move(y), f, g);
}

DeltaModule rehome(DeltaModule const& dm, ContextPtr home, Side side) {
  if (view_of(home, side) != dm.view()) {
    throw MismatchError("rehome: tuple does not live over the requested view");
  }
  if (dm.home() == home && dm.side() == side) return dm;
  return DeltaModule::from_blocks(std::move(home), side, dm.x(), dm.y(), dm.f_blocks(),
                                  dm.g_blocks());
}

DeltaModule delta_direct_sum(DeltaModule const& a, DeltaModule const& b) {
  if (a.view() != b.view()) throw MismatchError("direct sum of tuples over different contexts");
  auto p = a.view()->prime();
  std::vector<Mat> f, g;
  for (std::size_t i = 0; i < a.f_blocks().size(); ++i) {
    f.push_back(block_diag({a.f_blocks()[i], b.f_blocks()[i]}, p));
  }
  for (std::size_t i = 0; i < a.g_blocks().size(); ++i) {
    g.push_back(block_diag({a.g_blocks()[i], b.g_blocks()[i]}, p));
  }
  return DeltaModule::from_blocks(a.home(), a.side(), direct_sum_module(a.x(), b.x()),
                                  direct_sum_module(a.y(), b.y()), f, g);
}

std::vector<std::pair<Mat, Mat>> delta_hom_basis(DeltaModule const& s, DeltaModule const& t) {
  std::vector<std::pair<Mat, Mat>> out;
  auto sx = s.x().dim(), sy = s.y().dim(), tx = t.x().dim(), ty = t.y().dim();
  for (auto const& h : hom_basis(pack_view(s), pack_view(t))) {
    out.emplace_back(h.block(0, 0, tx, sx), h.block(tx, sx, ty, sy));
  }
  return out;
}

std::optional<DeltaModuleMap> delta_isomorphism(DeltaModule const& s, DeltaModule const& t) {
  if (s.view() != t.view()) return std::nullopt;
  auto iso = find_isomorphism(pack_view(s), pack_view(t));
  if (!iso) return std::nullopt;
  auto sx = s.x().dim(), sy = s.y().dim();
  if (t.x().dim() != sx) return std::nullopt;
  return DeltaModuleMap{s, t, iso->block(0, 0, sx, sx), iso->block(sx, sx, sy, sy)};
}

}  // namespace morita
