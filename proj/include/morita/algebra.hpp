#ifndef MORITA_ALGEBRA_HPP_
#define MORITA_ALGEBRA_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "morita/linalg.hpp"
#include "morita/report.hpp"

namespace morita {

enum class Side { left, right };

inline Side flip(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }
std::string to_string(Side s);

/// Raw description of a finite-dimensional algebra by structure constants:
/// b_i * b_j = sum_k constants[(i * dim + j) * dim + k] b_k.
struct AlgebraTable {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<Elem> constants;
  std::vector<Elem> unit;
  std::vector<std::string> labels;
  std::string name;

  Elem c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * dim + j) * dim + k];
  }
  Elem& c(std::size_t i, std::size_t j, std::size_t k) {
    return constants[(i * dim + j) * dim + k];
  }
};

CheckReport validate_algebra(AlgebraTable const& t);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Validated associative unital algebra over GF(p). Immutable; shared by
/// pointer between every module built over it.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Throws ValidationError naming the first failing basis triple.
  static AlgebraPtr make(AlgebraTable table);

  static AlgebraPtr ground(std::uint32_t p);
  /// k[x]/(x^n) with basis 1, x, ..., x^(n-1).
  static AlgebraPtr truncated_polynomial(std::uint32_t p, std::size_t n,
                                         std::string name = {});
  /// k^n with the primitive idempotents e1..en as basis.
  static AlgebraPtr split_semisimple(std::uint32_t p, std::size_t n,
                                     std::string name = {});

  std::uint32_t prime() const noexcept { return table_.p; }
  std::size_t dim() const noexcept { return table_.dim; }
  std::string const& name() const noexcept { return table_.name; }
  std::string label(std::size_t i) const;
  std::vector<std::string> const& labels() const noexcept { return table_.labels; }
  AlgebraTable const& table() const noexcept { return table_; }

  Elem constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_.c(i, j, k);
  }
  std::vector<Elem> const& unit() const noexcept { return table_.unit; }
  std::vector<Elem> multiply(std::vector<Elem> const& u, std::vector<Elem> const& v) const;

  /// Matrix of x -> b_i x (resp. x -> x b_i) in the basis.
  Mat const& left_regular(std::size_t i) const { return left_regular_[i]; }
  Mat const& right_regular(std::size_t i) const { return right_regular_[i]; }

  /// Basis indices that generate the algebra together with the unit.
  std::vector<std::size_t> const& generators() const noexcept { return generators_; }

  /// Monomial basis in the generators: word w = generator * parent-word.
  /// Index 0 is the empty word (the unit).
  struct Word {
    std::size_t generator;  // position in generators(); unused for the unit
    std::size_t parent;
    std::vector<std::size_t> letters;  // generator positions, leftmost first
  };
  std::vector<Word> const& words() const noexcept { return words_; }
  /// Column u holds the basis coordinates of word u.
  Mat const& word_coordinates() const noexcept { return word_coords_; }
  /// Column i: coordinates of basis element b_i in the word basis.
  Mat const& basis_in_words() const noexcept { return basis_in_words_; }

  AlgebraPtr opposite() const;

  /// Same field, dimension, structure constants and unit.
  bool same_structure(Algebra const& o) const noexcept;

 private:
  explicit Algebra(AlgebraTable table);
  void compute_generators();

  AlgebraTable table_;
  std::vector<Mat> left_regular_;
  std::vector<Mat> right_regular_;
  std::vector<std::size_t> generators_;
  std::vector<Word> words_;
  Mat word_coords_;
  Mat basis_in_words_;

  mutable std::once_flag opposite_once_;
  mutable AlgebraPtr opposite_;
  std::weak_ptr<const Algebra> opposite_of_;
};

bool same_algebra(AlgebraPtr const& a, AlgebraPtr const& b) noexcept;

CheckReport validate_module(Algebra const& algebra, Side side, std::size_t dim,
                            std::vector<Mat> const& actions);

/// One-sided module given by the action matrix of every basis element of its
/// algebra. Matrices act on column coordinate vectors for both sides; for a
/// right module x.b_i is actions[i] * x, so composition is reversed.
class Module {
 public:
  /// Validates the action relations; throws ValidationError.
  Module(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Mat> actions);

  struct Trusted {};
  /// Skips validation; for callers that have already established the
  /// relations (enumeration, internal constructions).
  Module(Trusted, AlgebraPtr algebra, Side side, std::size_t dim,
         std::vector<Mat> actions);

  static Module zero(AlgebraPtr algebra, Side side = Side::left);
  static Module regular(AlgebraPtr algebra, Side side = Side::left);
  static Module free(AlgebraPtr algebra, Side side, std::size_t rank);

  AlgebraPtr const& algebra() const noexcept { return algebra_; }
  Side side() const noexcept { return side_; }
  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t prime() const noexcept { return algebra_->prime(); }
  std::vector<Mat> const& actions() const noexcept { return actions_; }
  Mat const& action(std::size_t i) const { return actions_[i]; }
  Mat action_of(std::vector<Elem> const& element) const;

  /// A right A-module read as a left A^op-module and vice versa; the action
  /// matrices are unchanged.
  Module reinterpret_opposite() const;
  Module left_view() const { return side_ == Side::left ? *this : reinterpret_opposite(); }

  bool operator==(Module const& o) const;

  std::string describe() const;

 private:
  AlgebraPtr algebra_;
  Side side_;
  std::size_t dim_;
  std::vector<Mat> actions_;
};

/// (left, right)-bimodule: a left module over `left` and a right module over
/// `right` whose actions commute.
class Bimodule {
 public:
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
           std::vector<Mat> left_actions, std::vector<Mat> right_actions);

  static Bimodule regular(AlgebraPtr a);
  static Bimodule zero(AlgebraPtr left, AlgebraPtr right);

  AlgebraPtr const& left_algebra() const noexcept { return left_; }
  AlgebraPtr const& right_algebra() const noexcept { return right_; }
  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t prime() const noexcept { return left_->prime(); }
  std::vector<Mat> const& left_actions() const noexcept { return left_actions_; }
  std::vector<Mat> const& right_actions() const noexcept { return right_actions_; }

  Module as_left() const;
  Module as_right() const;
  /// The (right^op, left^op)-bimodule on the same space.
  Bimodule opposite() const;

  bool operator==(Bimodule const& o) const;

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::size_t dim_;
  std::vector<Mat> left_actions_;
  std::vector<Mat> right_actions_;
};

bool is_module_map(Module const& source, Module const& target, Mat const& m);

struct ModuleMap {
  Module source;
  Module target;
  Mat matrix;

  /// Throws ValidationError when `matrix` does not intertwine the actions.
  static ModuleMap make(Module source, Module target, Mat matrix);
};

// ---------------------------------------------------------------------------
// Constructions

struct DirectSum {
  Module sum;
  std::vector<Mat> injections;
  std::vector<Mat> projections;
};

/// Throws MismatchError for mixed algebras or sides.
DirectSum direct_sum(std::vector<Module> const& ms);
Module direct_sum_module(Module const& a, Module const& b);

/// Basis of Hom(x, y) as dim y x dim x matrices.
std::vector<Mat> hom_basis(Module const& x, Module const& y);
std::vector<ModuleMap> hom_space(Module const& x, Module const& y);
std::size_t hom_dim(Module const& x, Module const& y);

/// Quotient of the k-tensor space by the balancing relations. `projection`
/// maps plain tensor coordinates (index i * dim x + j for m_i (x) x_j) onto
/// the quotient; `section` is a right inverse.
struct TensorProduct {
  Module module;
  Mat projection;
  Mat section;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;

  std::size_t dim() const noexcept { return module.dim(); }
};

/// m (x)_A x for a (B, A)-bimodule m; the result is a left B-module.
TensorProduct tensor_over_algebra(Bimodule const& m, Module const& x);
/// m (x)_A x for a right A-module m; the result is a vector space (a module
/// over the ground field).
TensorProduct tensor_over_algebra(Module const& m, Module const& x);

/// 1 (x) a : m (x) x -> m (x) x' for a module map a : x -> x'.
Mat tensor_map(Bimodule const& m, TensorProduct const& src, TensorProduct const& dst,
               Mat const& a);

/// Hom_A(n, x) for an (A, B)-bimodule n and left A-module x, as a left
/// B-module via (b.phi)(v) = phi(v.b).
struct HomModule {
  Module module;
  std::vector<Mat> basis;  // dim x by dim n
  Mat flat;                // columns: row-major flattenings of basis
  std::size_t value_rows = 0;
  std::size_t value_cols = 0;

  Mat coordinates(Mat const& phi) const;
  Mat element(Mat const& coords) const;
};

HomModule hom_over_algebra(Bimodule const& n, Module const& x);

/// k-linear dual with transposed actions on the opposite side.
Module dual_module(Module const& x);

std::optional<Mat> find_isomorphism(Module const& x, Module const& y);
std::optional<ModuleMap> is_isomorphic(Module const& x, Module const& y);

/// Columns of the returned matrix generate x as a module; chosen greedily
/// from the standard basis.
Mat generating_set(Module const& x);

struct FreeCover {
  Module free;
  Mat surjection;
};
FreeCover free_cover(Module const& x);

/// A module map s : target -> source with surjection * s = identity.
std::optional<Mat> find_section(Module const& source, Module const& target,
                                Mat const& surjection);

bool is_projective(Module const& x);
bool is_injective(Module const& x);
bool is_flat(Module const& x);

/// Submodule spanned by the (independent, invariant) columns of `basis`.
struct SubmoduleResult {
  Module module;
  Mat inclusion;
};
SubmoduleResult submodule(Module const& z, Mat const& basis);
bool is_invariant_subspace(Module const& z, Mat const& basis);

struct QuotientResult {
  Module module;
  Mat projection;
  Mat section;
};
/// z / span(columns of sub).
QuotientResult quotient_module(Module const& z, Mat const& sub);

SubmoduleResult kernel_module(Module const& x, Mat const& phi);
SubmoduleResult image_module(Module const& y, Mat const& phi);
QuotientResult cokernel_module(Module const& y, Mat const& phi);

}  // namespace morita

#endif  // MORITA_ALGEBRA_HPP_
