#ifndef MORITA_MORITA_HPP_
#define MORITA_MORITA_HPP_

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "morita/algebra.hpp"

namespace morita {

class MoritaContext;
using ContextPtr = std::shared_ptr<const MoritaContext>;

/// (A, B, M, N) with M a (B, A)-bimodule and N an (A, B)-bimodule such that
/// both M (x)_A N and N (x)_B M vanish. Owns the ring Delta built from it.
class MoritaContext : public std::enable_shared_from_this<MoritaContext> {
 public:
  /// Throws ValidationError when a tensor product is nonzero or the
  /// bimodules sit over the wrong algebras.
  static ContextPtr make(AlgebraPtr a, AlgebraPtr b, Bimodule m, Bimodule n,
                         std::string name = {});

  AlgebraPtr const& a() const noexcept { return a_; }
  AlgebraPtr const& b() const noexcept { return b_; }
  Bimodule const& m() const noexcept { return m_; }
  Bimodule const& n() const noexcept { return n_; }
  std::string const& name() const noexcept { return name_; }
  std::uint32_t prime() const noexcept { return a_->prime(); }

  TensorProduct const& m_tensor_n() const noexcept { return mn_; }
  TensorProduct const& n_tensor_m() const noexcept { return nm_; }

  /// Basis order: A block, N block, M block, B block.
  AlgebraPtr const& delta() const noexcept { return delta_; }
  std::size_t offset_a() const noexcept { return 0; }
  std::size_t offset_n() const noexcept { return a_->dim(); }
  std::size_t offset_m() const noexcept { return a_->dim() + n_.dim(); }
  std::size_t offset_b() const noexcept { return a_->dim() + n_.dim() + m_.dim(); }

  /// (A^op, B^op, N^op, M^op). Right Delta-modules of this context are the
  /// left Delta-modules of the opposite one.
  ContextPtr opposite() const;

 private:
  MoritaContext(AlgebraPtr a, AlgebraPtr b, Bimodule m, Bimodule n, std::string name);

  AlgebraPtr a_, b_;
  Bimodule m_, n_;
  std::string name_;
  TensorProduct mn_, nm_;
  AlgebraPtr delta_;

  mutable std::once_flag opposite_once_;
  mutable ContextPtr opposite_;
  std::weak_ptr<const MoritaContext> opposite_of_;
};

AlgebraPtr build_delta_algebra(MoritaContext const& ctx);

/// A Delta-module as a tuple (X, Y, f, g). A left tuple over `home` has
/// f : M (x) X -> Y and g : N (x) Y -> X. A right tuple (W, V, h, t) is stored
/// as a left tuple over the opposite context (W (x)_A N is N^op (x) W), so
/// every algorithm runs on the left form returned by view().
class DeltaModule {
 public:
  /// f and g are given on the quotient coordinates of the tensor products.
  static DeltaModule make(ContextPtr home, Side side, Module x, Module y, Mat f, Mat g);
  /// f and g given blockwise: f_blocks[i] is x -> f(m_i (x) x) and
  /// g_blocks[j] is y -> g(n_j (x) y), with m_i, n_j bimodule basis vectors
  /// of the view context.
  static DeltaModule from_blocks(ContextPtr home, Side side, Module x, Module y,
                                 std::vector<Mat> const& f_blocks,
                                 std::vector<Mat> const& g_blocks);
  static DeltaModule zero(ContextPtr home, Side side = Side::left);

  ContextPtr const& home() const noexcept { return home_; }
  ContextPtr const& view() const noexcept { return view_; }
  Side side() const noexcept { return side_; }

  /// Components as left modules over the view context's algebras.
  Module const& x() const noexcept { return x_; }
  Module const& y() const noexcept { return y_; }
  /// Components on the side a reader expects (right modules for right tuples).
  Module component_x() const;
  Module component_y() const;

  TensorProduct const& mx() const noexcept { return mx_; }
  TensorProduct const& ny() const noexcept { return ny_; }
  Mat const& f() const noexcept { return f_; }
  Mat const& g() const noexcept { return g_; }
  std::vector<Mat> const& f_blocks() const noexcept { return f_blocks_; }
  std::vector<Mat> const& g_blocks() const noexcept { return g_blocks_; }

  std::size_t dim() const noexcept { return x_.dim() + y_.dim(); }
  std::string describe() const;

 private:
  DeltaModule(ContextPtr home, Side side, Module x, Module y, TensorProduct mx,
              TensorProduct ny);
  void fill_blocks();

  ContextPtr home_, view_;
  Side side_;
  Module x_, y_;
  TensorProduct mx_, ny_;
  Mat f_, g_;
  std::vector<Mat> f_blocks_, g_blocks_;
};

CheckReport validate_tuple(DeltaModule const& dm);

/// Pair (a, b) of component maps. Both squares b f = f' (1 (x) a) and
/// a g = g' (1 (x) b) must commute.
struct DeltaModuleMap {
  DeltaModule source;
  DeltaModule target;
  Mat a;
  Mat b;

  static DeltaModuleMap make(DeltaModule source, DeltaModule target, Mat a, Mat b);
  /// Block diagonal matrix on the packed modules.
  Mat packed() const;
};

bool is_delta_map(DeltaModule const& s, DeltaModule const& t, Mat const& a, Mat const& b);

/// The genuine Delta-module X (+) Y (basis: X block then Y block). Left
/// tuples give left modules over home()->delta(), right tuples right ones.
Module pack(DeltaModule const& dm);
/// Left module over view()->delta() regardless of side.
Module pack_view(DeltaModule const& dm);

struct Unpacked {
  DeltaModule tuple;
  /// Invertible module map pack(tuple) -> z.
  Mat witness;
};
/// Inverse of pack: splits z by the idempotent given by the unit of A.
Unpacked unpack(ContextPtr home, Module const& z);

/// The character module (X+, Y+, g+, f+) on the opposite side.
DeltaModule delta_dual(DeltaModule const& dm);

/// The same data seen from `home` on `side`: dm must already be a tuple whose
/// view context is home (left) or home's opposite (right).
DeltaModule rehome(DeltaModule const& dm, ContextPtr home, Side side);

DeltaModule delta_direct_sum(DeltaModule const& a, DeltaModule const& b);

/// Isomorphism of packed modules; returns the pair (a, b).
std::optional<DeltaModuleMap> delta_isomorphism(DeltaModule const& s, DeltaModule const& t);

/// Homomorphisms of tuples as block pairs (a, b).
std::vector<std::pair<Mat, Mat>> delta_hom_basis(DeltaModule const& s, DeltaModule const& t);

}  // namespace morita

#endif  // MORITA_MORITA_HPP_
