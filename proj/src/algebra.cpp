#include "morita/algebra.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "morita/errors.hpp"

namespace morita {

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

namespace {

std::string triple_label(AlgebraTable const& t, std::size_t i) {
  if (i < t.labels.size() && !t.labels[i].empty()) return t.labels[i];
  return "b" + std::to_string(i);
}

// Coordinates of b_i * v for an arbitrary element v.
std::vector<Elem> times_basis_left(AlgebraTable const& t, FieldSpec const& f,
                                   std::size_t i, std::vector<Elem> const& v) {
  std::vector<Elem> out(t.dim, 0);
  for (std::size_t j = 0; j < t.dim; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t k = 0; k < t.dim; ++k) {
      out[k] = f.add(out[k], f.mul(v[j], t.c(i, j, k)));
    }
  }
  return out;
}

}  // namespace

CheckReport validate_algebra(AlgebraTable const& t) {
  CheckReport r;
  r.check = "validate_algebra";
  if (!is_prime(t.p)) {
    r.add("field", false, "characteristic " + std::to_string(t.p) + " is not prime");
    return r;
  }
  if (t.dim == 0 || t.constants.size() != t.dim * t.dim * t.dim ||
      t.unit.size() != t.dim) {
    r.add("shape", false, "structure constants or unit have the wrong length");
    return r;
  }
  for (auto v : t.constants) {
    if (v >= t.p) {
      r.add("shape", false, "structure constant not reduced mod p");
      return r;
    }
  }
  r.add("shape", true);
  FieldSpec f(t.p);
  auto n = t.dim;
  // (b_i b_j) b_k versus b_i (b_j b_k)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Elem> lhs(n, 0), rhs(n, 0);
        for (std::size_t l = 0; l < n; ++l) {
          Elem a = t.c(i, j, l);
          if (a != 0) {
            for (std::size_t m = 0; m < n; ++m) lhs[m] = f.add(lhs[m], f.mul(a, t.c(l, k, m)));
          }
          Elem b = t.c(j, k, l);
          if (b != 0) {
            for (std::size_t m = 0; m < n; ++m) rhs[m] = f.add(rhs[m], f.mul(b, t.c(i, l, m)));
          }
        }
        if (lhs != rhs) {
          r.add("associativity", false,
                "associativity fails on basis triple (" + triple_label(t, i) + ", " +
                    triple_label(t, j) + ", " + triple_label(t, k) + ")");
          r.witness("basis triple (" + triple_label(t, i) + ", " + triple_label(t, j) +
                    ", " + triple_label(t, k) + ")");
          return r;
        }
      }
    }
  }
  r.add("associativity", true);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> e(n, 0);
    e[i] = 1;
    std::vector<Elem> left(n, 0), right(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (t.unit[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        left[k] = f.add(left[k], f.mul(t.unit[j], t.c(j, i, k)));
        right[k] = f.add(right[k], f.mul(t.unit[j], t.c(i, j, k)));
      }
    }
    if (left != e || right != e) {
      r.add("unit", false, "unit fails on basis element " + triple_label(t, i));
      r.witness("basis element " + triple_label(t, i));
      return r;
    }
  }
  r.add("unit", true);
  return r;
}

Algebra::Algebra(AlgebraTable table) : table_(std::move(table)) {
  auto n = table_.dim;
  auto p = table_.p;
  if (table_.labels.size() != n) {
    table_.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table_.labels[i].empty()) table_.labels[i] = "b" + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Mat l(p, n, n), r(p, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l(k, j) = table_.c(i, j, k);
        r(k, j) = table_.c(j, i, k);
      }
    }
    left_regular_.push_back(std::move(l));
    right_regular_.push_back(std::move(r));
  }
  compute_generators();
}

AlgebraPtr Algebra::make(AlgebraTable table) {
  auto report = validate_algebra(table);
  if (!report.passed()) {
    std::string why = report.clauses.empty() ? "invalid algebra" : report.clauses.back().detail;
    throw ValidationError("algebra " + (table.name.empty() ? std::string("<anonymous>") : table.name) +
                          ": " + why);
  }
  return AlgebraPtr(new Algebra(std::move(table)));
}

void Algebra::compute_generators() {
  auto n = table_.dim;
  auto p = table_.p;
  FieldSpec f(p);
  std::vector<std::vector<Elem>> coords{table_.unit};
  words_.push_back(Word{0, 0, {}});

  auto span_rank = [&](std::vector<std::vector<Elem>> const& vs) {
    Mat m(p, vs.size(), n);
    for (std::size_t r = 0; r < vs.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = vs[r][c];
    }
    return rank(m);
  };
  auto in_span = [&](std::vector<Elem> const& v) {
    auto with = coords;
    with.push_back(v);
    return span_rank(with) == coords.size();
  };

  for (std::size_t i = 0; i < n && coords.size() < n; ++i) {
    std::vector<Elem> e(n, 0);
    e[i] = 1;
    if (in_span(e)) continue;
    generators_.push_back(i);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        for (std::size_t u = 0; u < words_.size(); ++u) {
          auto prod = times_basis_left(table_, f, generators_[g], coords[u]);
          if (in_span(prod)) continue;
          Word w{g, u, {g}};
          w.letters.insert(w.letters.end(), words_[u].letters.begin(),
                           words_[u].letters.end());
          words_.push_back(std::move(w));
          coords.push_back(std::move(prod));
          grew = true;
        }
      }
    }
  }
  word_coords_ = Mat(p, n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t k = 0; k < n; ++k) word_coords_(k, u) = coords[u][k];
  }
  auto inv = inverse(word_coords_);
  if (!inv) throw ValidationError("monomial basis construction failed");
  basis_in_words_ = *inv;
}

AlgebraPtr Algebra::ground(std::uint32_t p) {
  AlgebraTable t;
  t.p = p;
  t.dim = 1;
  t.constants = {1};
  t.unit = {1};
  t.labels = {"1"};
  t.name = "k";
  return make(std::move(t));
}

AlgebraPtr Algebra::truncated_polynomial(std::uint32_t p, std::size_t n, std::string name) {
  AlgebraTable t;
  t.p = p;
  t.dim = n;
  t.constants.assign(n * n * n, 0);
  t.unit.assign(n, 0);
  t.unit[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) t.c(i, j, i + j) = 1;
    t.labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x" + std::to_string(i));
  }
  t.name = name.empty() ? "k[x]/(x^" + std::to_string(n) + ")" : std::move(name);
  return make(std::move(t));
}

AlgebraPtr Algebra::split_semisimple(std::uint32_t p, std::size_t n, std::string name) {
  AlgebraTable t;
  t.p = p;
  t.dim = n;
  t.constants.assign(n * n * n, 0);
  t.unit.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    t.c(i, i, i) = 1;
    t.labels.push_back("e" + std::to_string(i + 1));
  }
  t.name = name.empty() ? "k^" + std::to_string(n) : std::move(name);
  return make(std::move(t));
}

std::string Algebra::label(std::size_t i) const {
  return i < table_.labels.size() ? table_.labels[i] : "b" + std::to_string(i);
}

std::vector<Elem> Algebra::multiply(std::vector<Elem> const& u,
                                    std::vector<Elem> const& v) const {
  FieldSpec f(prime());
  std::vector<Elem> out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    auto bv = times_basis_left(table_, f, i, v);
    for (std::size_t k = 0; k < dim(); ++k) out[k] = f.add(out[k], f.mul(u[i], bv[k]));
  }
  return out;
}

AlgebraPtr Algebra::opposite() const {
  if (auto back = opposite_of_.lock()) return back;
  std::call_once(opposite_once_, [this] {
    AlgebraTable t = table_;
    for (std::size_t i = 0; i < t.dim; ++i) {
      for (std::size_t j = 0; j < t.dim; ++j) {
        for (std::size_t k = 0; k < t.dim; ++k) t.c(i, j, k) = table_.c(j, i, k);
      }
    }
    t.name = table_.name + "^op";
    std::shared_ptr<Algebra> op(new Algebra(std::move(t)));
    op->opposite_of_ = weak_from_this();
    opposite_ = std::move(op);
  });
  return opposite_;
}

bool Algebra::same_structure(Algebra const& o) const noexcept {
  return table_.p == o.table_.p && table_.dim == o.table_.dim &&
         table_.constants == o.table_.constants && table_.unit == o.table_.unit;
}

bool same_algebra(AlgebraPtr const& a, AlgebraPtr const& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

// ---------------------------------------------------------------------------
// Modules

CheckReport validate_module(Algebra const& algebra, Side side, std::size_t dim,
                            std::vector<Mat> const& actions) {
  CheckReport r;
  r.check = "validate_module";
  auto n = algebra.dim();
  auto p = algebra.prime();
  if (actions.size() != n) {
    r.add("shape", false, "expected one action matrix per basis element");
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (actions[i].rows() != dim || actions[i].cols() != dim || actions[i].prime() != p) {
      r.add("shape", false, "action of " + algebra.label(i) + " has the wrong shape");
      return r;
    }
  }
  r.add("shape", true);
  Mat unit(p, dim, dim);
  for (std::size_t i = 0; i < n; ++i) unit.add_scaled(actions[i], algebra.unit()[i]);
  if (!unit.is_identity()) {
    r.add("unit", false, "the unit does not act as the identity");
    return r;
  }
  r.add("unit", true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Mat lhs = side == Side::left ? actions[i] * actions[j] : actions[j] * actions[i];
      Mat rhs(p, dim, dim);
      for (std::size_t k = 0; k < n; ++k) rhs.add_scaled(actions[k], algebra.constant(i, j, k));
      if (!(lhs == rhs)) {
        r.add("relations", false,
              "action fails on product " + algebra.label(i) + "*" + algebra.label(j));
        r.witness("product " + algebra.label(i) + "*" + algebra.label(j));
        return r;
      }
    }
  }
  r.add("relations", true);
  return r;
}

Module::Module(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Mat> actions)
    : algebra_(std::move(algebra)), side_(side), dim_(dim), actions_(std::move(actions)) {
  auto report = validate_module(*algebra_, side_, dim_, actions_);
  if (!report.passed()) {
    throw ValidationError("invalid " + to_string(side_) + " module over " +
                          algebra_->name() + ": " + report.clauses.back().detail);
  }
}

Module::Module(Trusted, AlgebraPtr algebra, Side side, std::size_t dim,
               std::vector<Mat> actions)
    : algebra_(std::move(algebra)), side_(side), dim_(dim), actions_(std::move(actions)) {}

Module Module::zero(AlgebraPtr algebra, Side side) {
  std::vector<Mat> acts(algebra->dim(), Mat(algebra->prime(), 0, 0));
  return Module(Trusted{}, std::move(algebra), side, 0, std::move(acts));
}

Module Module::regular(AlgebraPtr algebra, Side side) {
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    acts.push_back(side == Side::left ? algebra->left_regular(i) : algebra->right_regular(i));
  }
  auto n = algebra->dim();
  return Module(Trusted{}, std::move(algebra), side, n, std::move(acts));
}

Module Module::free(AlgebraPtr algebra, Side side, std::size_t rank) {
  std::vector<Mat> acts;
  auto p = algebra->prime();
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    Mat const& r = side == Side::left ? algebra->left_regular(i) : algebra->right_regular(i);
    acts.push_back(block_diag(std::vector<Mat>(rank, r), p));
  }
  auto n = algebra->dim() * rank;
  return Module(Trusted{}, std::move(algebra), side, n, std::move(acts));
}

Mat Module::action_of(std::vector<Elem> const& element) const {
  Mat out(prime(), dim_, dim_);
  for (std::size_t i = 0; i < actions_.size(); ++i) out.add_scaled(actions_[i], element[i]);
  return out;
}

Module Module::reinterpret_opposite() const {
  return Module(Trusted{}, algebra_->opposite(), flip(side_), dim_, actions_);
}

bool Module::operator==(Module const& o) const {
  return side_ == o.side_ && dim_ == o.dim_ && same_algebra(algebra_, o.algebra_) &&
         actions_ == o.actions_;
}

std::string Module::describe() const {
  std::ostringstream os;
  os << to_string(side_) << " " << algebra_->name() << "-module of dim " << dim_;
  if (dim_ > 0) {
    os << " {";
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      if (i) os << ", ";
      os << algebra_->label(i) << ": " << actions_[i].to_string();
    }
    os << "}";
  }
  return os.str();
}

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                   std::vector<Mat> left_actions, std::vector<Mat> right_actions)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_actions_(std::move(left_actions)),
      right_actions_(std::move(right_actions)) {
  if (left_->prime() != right_->prime()) throw MismatchError("bimodule over two fields");
  auto lr = validate_module(*left_, Side::left, dim_, left_actions_);
  if (!lr.passed()) throw ValidationError("bimodule left action: " + lr.clauses.back().detail);
  auto rr = validate_module(*right_, Side::right, dim_, right_actions_);
  if (!rr.passed()) throw ValidationError("bimodule right action: " + rr.clauses.back().detail);
  for (std::size_t i = 0; i < left_actions_.size(); ++i) {
    for (std::size_t j = 0; j < right_actions_.size(); ++j) {
      if (!(left_actions_[i] * right_actions_[j] == right_actions_[j] * left_actions_[i])) {
        throw ValidationError("bimodule actions of " + left_->label(i) + " and " +
                              right_->label(j) + " do not commute");
      }
    }
  }
}

Bimodule Bimodule::regular(AlgebraPtr a) {
  std::vector<Mat> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->left_regular(i));
    r.push_back(a->right_regular(i));
  }
  auto n = a->dim();
  return Bimodule(a, a, n, std::move(l), std::move(r));
}

Bimodule Bimodule::zero(AlgebraPtr left, AlgebraPtr right) {
  auto p = left->prime();
  std::vector<Mat> l(left->dim(), Mat(p, 0, 0));
  std::vector<Mat> r(right->dim(), Mat(p, 0, 0));
  return Bimodule(std::move(left), std::move(right), 0, std::move(l), std::move(r));
}

Module Bimodule::as_left() const {
  return Module(Module::Trusted{}, left_, Side::left, dim_, left_actions_);
}

Module Bimodule::as_right() const {
  return Module(Module::Trusted{}, right_, Side::right, dim_, right_actions_);
}

Bimodule Bimodule::opposite() const {
  return Bimodule(right_->opposite(), left_->opposite(), dim_, right_actions_, left_actions_);
}

bool Bimodule::operator==(Bimodule const& o) const {
  return dim_ == o.dim_ && same_algebra(left_, o.left_) && same_algebra(right_, o.right_) &&
         left_actions_ == o.left_actions_ && right_actions_ == o.right_actions_;
}

bool is_module_map(Module const& source, Module const& target, Mat const& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) return false;
  if (source.side() != target.side() || !same_algebra(source.algebra(), target.algebra())) {
    return false;
  }
  for (auto g : source.algebra()->generators()) {
    if (!(m * source.action(g) == target.action(g) * m)) return false;
  }
  return true;
}

ModuleMap ModuleMap::make(Module source, Module target, Mat matrix) {
  if (!is_module_map(source, target, matrix)) {
    throw ValidationError("matrix is not a module homomorphism");
  }
  return ModuleMap{std::move(source), std::move(target), std::move(matrix)};
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

void require_compatible(Module const& a, Module const& b, char const* what) {
  if (a.side() != b.side() || !same_algebra(a.algebra(), b.algebra())) {
    throw MismatchError(std::string(what) + ": modules over different algebras or sides");
  }
}

}  // namespace

DirectSum direct_sum(std::vector<Module> const& ms) {
  if (ms.empty()) throw MismatchError("direct sum of an empty family");
  for (auto const& m : ms) require_compatible(ms.front(), m, "direct sum");
  auto const& alg = ms.front().algebra();
  auto p = alg->prime();
  std::size_t total = 0;
  for (auto const& m : ms) total += m.dim();
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    std::vector<Mat> blocks;
    for (auto const& m : ms) blocks.push_back(m.action(i));
    acts.push_back(block_diag(blocks, p));
  }
  DirectSum out{Module(Module::Trusted{}, alg, ms.front().side(), total, std::move(acts)), {}, {}};
  std::size_t offset = 0;
  for (auto const& m : ms) {
    Mat inj(p, total, m.dim());
    inj.set_block(offset, 0, Mat::identity(p, m.dim()));
    out.projections.push_back(inj.transpose());
    out.injections.push_back(std::move(inj));
    offset += m.dim();
  }
  return out;
}

Module direct_sum_module(Module const& a, Module const& b) {
  return direct_sum({a, b}).sum;
}

std::vector<Mat> hom_basis(Module const& x, Module const& y) {
  require_compatible(x, y, "hom");
  auto p = x.prime();
  auto dx = x.dim(), dy = y.dim();
  if (dx == 0 || dy == 0) return {};
  auto const& gens = x.algebra()->generators();
  FieldSpec f(p);
  // Unknown phi[r][k] sits at column r * dx + k; one equation per entry of
  // phi * X(g) - Y(g) * phi.
  Mat sys(p, gens.size() * dy * dx, dy * dx);
  std::size_t row = 0;
  for (auto g : gens) {
    Mat const& P = x.action(g);
    Mat const& Q = y.action(g);
    for (std::size_t r = 0; r < dy; ++r) {
      for (std::size_t c = 0; c < dx; ++c, ++row) {
        for (std::size_t k = 0; k < dx; ++k) {
          auto& e = sys(row, r * dx + k);
          e = f.add(e, P(k, c));
        }
        for (std::size_t k = 0; k < dy; ++k) {
          auto& e = sys(row, k * dx + c);
          e = f.sub(e, Q(r, k));
        }
      }
    }
  }
  Mat ker = kernel_basis(sys);
  std::vector<Mat> out;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    out.push_back(Mat::unflatten(ker.row(i).transpose(), dy, dx));
  }
  return out;
}

std::vector<ModuleMap> hom_space(Module const& x, Module const& y) {
  std::vector<ModuleMap> out;
  for (auto& m : hom_basis(x, y)) out.push_back(ModuleMap{x, y, std::move(m)});
  return out;
}

std::size_t hom_dim(Module const& x, Module const& y) { return hom_basis(x, y).size(); }

namespace {

// Quotient of m (x) x by the balancing relations. `right_actions` is the
// right action on m of every basis element of x's algebra.
Cokernel balanced_quotient(std::vector<Mat> const& right_actions, std::size_t dm,
                           Module const& x) {
  auto p = x.prime();
  auto dx = x.dim();
  std::vector<Mat> rels;
  Mat im = Mat::identity(p, dm), ix = Mat::identity(p, dx);
  for (auto g : x.algebra()->generators()) {
    rels.push_back(kronecker(right_actions[g], ix) - kronecker(im, x.action(g)));
  }
  return cokernel(hstack(rels, p, dm * dx));
}

}  // namespace

TensorProduct tensor_over_algebra(Bimodule const& m, Module const& x) {
  if (x.side() != Side::left || !same_algebra(m.right_algebra(), x.algebra())) {
    throw MismatchError("tensor: bimodule right algebra differs from the module's algebra");
  }
  auto p = x.prime();
  auto q = balanced_quotient(m.right_actions(), m.dim(), x);
  Mat ix = Mat::identity(p, x.dim());
  std::vector<Mat> acts;
  for (auto const& l : m.left_actions()) {
    acts.push_back(q.projection * kronecker(l, ix) * q.section);
  }
  return TensorProduct{
      Module(Module::Trusted{}, m.left_algebra(), Side::left, q.quotient_dim, std::move(acts)),
      std::move(q.projection), std::move(q.section), m.dim(), x.dim()};
}

TensorProduct tensor_over_algebra(Module const& m, Module const& x) {
  if (m.side() != Side::right || x.side() != Side::left ||
      !same_algebra(m.algebra(), x.algebra())) {
    throw MismatchError("tensor: expected a right and a left module over one algebra");
  }
  auto q = balanced_quotient(m.actions(), m.dim(), x);
  auto k = Algebra::ground(x.prime());
  std::vector<Mat> acts{Mat::identity(x.prime(), q.quotient_dim)};
  return TensorProduct{Module(Module::Trusted{}, k, Side::left, q.quotient_dim, std::move(acts)),
                       std::move(q.projection), std::move(q.section), m.dim(), x.dim()};
}

Mat tensor_map(Bimodule const& m, TensorProduct const& src, TensorProduct const& dst,
               Mat const& a) {
  return dst.projection * kronecker(Mat::identity(m.prime(), m.dim()), a) * src.section;
}

Mat HomModule::coordinates(Mat const& phi) const {
  auto p = module.prime();
  if (basis.empty()) return Mat(p, 0, 1);
  auto sol = solve(flat, phi.flatten());
  if (!sol) throw ValidationError("map is not a module homomorphism");
  return *sol;
}

Mat HomModule::element(Mat const& coords) const {
  Mat out(module.prime(), value_rows, value_cols);
  for (std::size_t t = 0; t < basis.size(); ++t) out.add_scaled(basis[t], coords(t, 0));
  return out;
}

HomModule hom_over_algebra(Bimodule const& n, Module const& x) {
  if (x.side() != Side::left || !same_algebra(n.left_algebra(), x.algebra())) {
    throw MismatchError("hom: bimodule left algebra differs from the module's algebra");
  }
  auto p = x.prime();
  auto basis = hom_basis(n.as_left(), x);
  std::vector<Mat> cols;
  for (auto const& b : basis) cols.push_back(b.flatten());
  HomModule out{Module::zero(n.right_algebra()), basis,
                hstack(cols, p, x.dim() * n.dim()), x.dim(), n.dim()};
  std::vector<Mat> acts;
  for (auto const& r : n.right_actions()) {
    Mat act(p, basis.size(), basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
      act.set_block(0, t, out.coordinates(basis[t] * r));
    }
    acts.push_back(std::move(act));
  }
  out.module = Module(Module::Trusted{}, n.right_algebra(), Side::left, basis.size(),
                      std::move(acts));
  return out;
}

Module dual_module(Module const& x) {
  std::vector<Mat> acts;
  for (auto const& a : x.actions()) acts.push_back(a.transpose());
  return Module(Module::Trusted{}, x.algebra(), flip(x.side()), x.dim(), std::move(acts));
}

std::optional<Mat> find_isomorphism(Module const& x, Module const& y) {
  if (x.dim() != y.dim() || x.side() != y.side() || !same_algebra(x.algebra(), y.algebra())) {
    return std::nullopt;
  }
  auto p = x.prime();
  auto n = x.dim();
  if (n == 0) return Mat(p, 0, 0);
  for (std::size_t i = 0; i < x.algebra()->dim(); ++i) {
    if (rank(x.action(i)) != rank(y.action(i))) return std::nullopt;
  }
  auto basis = hom_basis(x, y);
  if (basis.empty()) return std::nullopt;
  if (basis.size() != hom_dim(x, x) || basis.size() != hom_dim(y, y)) return std::nullopt;
  auto h = basis.size();
  auto invertible = [&](Mat const& m) { return rank(m) == n; };
  for (auto const& b : basis) {
    if (invertible(b)) return b;
  }
  double space = std::pow(static_cast<double>(p), static_cast<double>(h));
  std::vector<Elem> coeff(h, 0);
  auto combine = [&] {
    Mat m(p, n, n);
    for (std::size_t t = 0; t < h; ++t) m.add_scaled(basis[t], coeff[t]);
    return m;
  };
  if (space <= double(1u << 18)) {
    // Odometer over every coefficient vector.
    while (true) {
      std::size_t t = 0;
      while (t < h && ++coeff[t] == p) coeff[t++] = 0;
      if (t == h) break;
      Mat m = combine();
      if (invertible(m)) return m;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<Elem> dist(0, p - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    for (auto& c : coeff) c = dist(rng);
    Mat m = combine();
    if (invertible(m)) return m;
  }
  return std::nullopt;
}

std::optional<ModuleMap> is_isomorphic(Module const& x, Module const& y) {
  auto m = find_isomorphism(x, y);
  if (!m) return std::nullopt;
  return ModuleMap{x, y, std::move(*m)};
}

Mat generating_set(Module const& x) {
  auto p = x.prime();
  auto n = x.dim();
  Mat span(p, n, 0);
  std::vector<Mat> chosen;
  for (std::size_t j = 0; j < n && span.cols() < n; ++j) {
    Mat e = Mat::unit_column(p, n, j);
    if (rank(hstack({span, e}, p, n)) == span.cols()) continue;
    chosen.push_back(e);
    std::vector<Mat> parts{span};
    for (auto const& a : x.actions()) parts.push_back(a * e);
    span = image_basis(hstack(parts, p, n)).transpose();
  }
  return hstack(chosen, p, n);
}

FreeCover free_cover(Module const& x) {
  auto p = x.prime();
  auto gens = generating_set(x);
  auto const& alg = x.algebra();
  auto g = gens.cols();
  Module free = Module::free(alg, x.side(), g);
  Mat surj(p, x.dim(), alg->dim() * g);
  for (std::size_t j = 0; j < g; ++j) {
    Mat xj = gens.col(j);
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      surj.set_block(0, j * alg->dim() + i, x.action(i) * xj);
    }
  }
  return FreeCover{std::move(free), std::move(surj)};
}

std::optional<Mat> find_section(Module const& source, Module const& target,
                                Mat const& surjection) {
  auto p = source.prime();
  auto dt = target.dim();
  if (dt == 0) return Mat(p, source.dim(), 0);
  auto basis = hom_basis(target, source);
  if (basis.empty()) return std::nullopt;
  std::vector<Mat> cols;
  for (auto const& h : basis) cols.push_back((surjection * h).flatten());
  auto sol = solve(hstack(cols, p, dt * dt), Mat::identity(p, dt).flatten());
  if (!sol) return std::nullopt;
  Mat s(p, source.dim(), dt);
  for (std::size_t t = 0; t < basis.size(); ++t) s.add_scaled(basis[t], (*sol)(t, 0));
  return s;
}

bool is_projective(Module const& x) {
  if (x.dim() == 0) return true;
  auto cover = free_cover(x);
  return find_section(cover.free, x, cover.surjection).has_value();
}

bool is_injective(Module const& x) { return is_projective(dual_module(x)); }

bool is_flat(Module const& x) { return is_projective(x); }

bool is_invariant_subspace(Module const& z, Mat const& basis) {
  auto p = z.prime();
  auto r = rank(basis);
  for (auto g : z.algebra()->generators()) {
    if (rank(hstack({basis, z.action(g) * basis}, p, z.dim())) != r) return false;
  }
  return true;
}

SubmoduleResult submodule(Module const& z, Mat const& basis) {
  if (rank(basis) != basis.cols()) throw ValidationError("submodule basis is dependent");
  if (!is_invariant_subspace(z, basis)) throw ValidationError("subspace is not a submodule");
  std::vector<Mat> acts;
  for (auto const& a : z.actions()) {
    auto s = solve(basis, a * basis);
    acts.push_back(std::move(*s));
  }
  return SubmoduleResult{
      Module(Module::Trusted{}, z.algebra(), z.side(), basis.cols(), std::move(acts)), basis};
}

QuotientResult quotient_module(Module const& z, Mat const& sub) {
  auto c = cokernel(sub);
  std::vector<Mat> acts;
  for (auto const& a : z.actions()) acts.push_back(c.projection * a * c.section);
  return QuotientResult{
      Module(Module::Trusted{}, z.algebra(), z.side(), c.quotient_dim, std::move(acts)),
      std::move(c.projection), std::move(c.section)};
}

SubmoduleResult kernel_module(Module const& x, Mat const& phi) {
  return submodule(x, kernel_basis(phi).transpose());
}

SubmoduleResult image_module(Module const& y, Mat const& phi) {
  return submodule(y, image_basis(phi).transpose());
}

QuotientResult cokernel_module(Module const& y, Mat const& phi) {
  return quotient_module(y, phi);
}

}  // namespace morita
