#ifndef MORITA_GORENSTEIN_HPP_
#define MORITA_GORENSTEIN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "morita/classes.hpp"

namespace morita {

/// Cochain complex C^lo -> C^(lo+1) -> ... with maps[i] : terms[i] -> terms[i+1].
struct ChainComplex {
  int lo = 0;
  std::vector<Module> terms;
  std::vector<Mat> maps;

  int hi() const noexcept { return lo + static_cast<int>(terms.size()) - 1; }
  Module const& term(int degree) const { return terms.at(static_cast<std::size_t>(degree - lo)); }
  /// Map leaving `degree`.
  Mat const& map(int degree) const { return maps.at(static_cast<std::size_t>(degree - lo)); }
};

/// Every map is a module map and consecutive maps compose to zero.
CheckReport validate_complex(ChainComplex const& c);
/// dim ker(out) - rank(in) at an inner degree.
std::size_t homology_dim(ChainComplex const& c, int degree);
bool exact_inside(ChainComplex const& c);

/// ... -> P_1 -> P_0 -> x with P_0 = x when x is projective. Stops after
/// `max_terms` terms or when a kernel vanishes.
struct ProjectiveResolution {
  Module target;
  std::vector<Module> terms;
  std::vector<Mat> maps;  // maps[i] : P_(i+1) -> P_i
  Mat augmentation;       // P_0 -> x
  bool finite = false;    // the last kernel is zero

  std::size_t length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
};
ProjectiveResolution projective_resolution(Module const& x, std::size_t max_terms);

/// x -> I^0 -> I^1 -> ..., the dual of a projective resolution of x+.
struct InjectiveCoresolution {
  Module source;
  std::vector<Module> terms;
  std::vector<Mat> maps;  // maps[i] : I^i -> I^(i+1)
  Mat coaugmentation;     // x -> I^0
  bool finite = false;

  std::size_t length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
};
InjectiveCoresolution injective_coresolution(Module const& x, std::size_t max_terms);

inline constexpr std::size_t kInjectiveDimensionCutoff = 8;

/// Injective dimension when the coresolution ends within `cutoff` steps.
std::optional<std::size_t> injective_dimension(Module const& x,
                                               std::size_t cutoff = kInjectiveDimensionCutoff);

/// Degrees -w .. w-1: a projective resolution of x spliced at d^(-1) with a
/// projective coresolution, so that ker d^0 = x. Throws WindowError when a
/// coresolution term is not projective.
ChainComplex complete_resolution_window(Module const& x, std::size_t w);

/// Hom(C, L) as the dimension of each Hom(C^i, L) and the homology at inner
/// degrees (indexed like the complex).
struct HomComplex {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> homology;  // zero at the two ends
  int first_nonexact = 0;
  bool exact = true;
};
HomComplex hom_complex(ChainComplex const& c, Module const& test);

struct NamedModule {
  std::string name;
  Module module;
};

struct WindowWitness {
  int position = 0;
  std::string test_module;
  std::size_t homology = 0;
};

struct WindowVerdict {
  std::size_t window = 0;
  bool complex_exact = false;
  bool kernel_matches = false;
  bool consistent = false;
  std::vector<HomComplex> hom;
  std::optional<WindowWitness> witness;
  CheckReport report;
};

/// Exactness of c inside the window, ker d^0 = x, and exactness of Hom(c, L)
/// for every test module. Consistent verdicts are reported as consistent up
/// to the window, never as a proof.
WindowVerdict window_check(ChainComplex const& c, Module const& x,
                           std::vector<NamedModule> const& tests, std::size_t w,
                           std::string check_name);

/// Complete resolution window of x tested against the sampled members of L.
WindowVerdict is_gorenstein_projective_window(Module const& x, ClassOracle const& test_class,
                                              std::size_t w, std::size_t test_bound);
/// The same with L the flat modules.
WindowVerdict is_ding_projective_window(Module const& x, std::size_t w, std::size_t test_bound);

// ---------------------------------------------------------------------------
// Transport along T and U

enum class Corner { a, b };

struct DeltaComplex {
  int lo = 0;
  std::vector<DeltaModule> terms;
  std::vector<DeltaModuleMap> maps;
};

/// T_A (or T_B) applied levelwise.
DeltaComplex transport(ContextPtr const& ctx, Corner corner, ChainComplex const& c);
/// U_A (or U_B) applied levelwise.
ChainComplex restrict_to_corner(DeltaComplex const& c, Corner corner);
ChainComplex packed(DeltaComplex const& c);

/// Test modules for the monic class: T_A(C), T_B(D), their sums, and
/// enumerated members up to the bound.
std::vector<DeltaModule> monic_test_tuples(ContextPtr const& ctx, ComponentClasses const& cc,
                                           std::size_t bound);

struct TransferResult {
  CheckReport report;
  std::optional<DeltaComplex> complex;
  std::optional<DeltaModule> image;
};

/// x Gorenstein over its corner algebra => T(x) Gorenstein over Delta for the
/// monic/epic pair, with the adjunction dimension cross-check at every level.
TransferResult check_gorenstein_transfer_forward(ContextPtr const& ctx, Corner corner,
                                                 Module const& x, ComponentClasses const& cc,
                                                 std::size_t w, std::size_t bound);

/// A Gorenstein tuple with complex `c` and ker d^0 = dm => its corner
/// component is Gorenstein over the corner algebra, via U levelwise.
CheckReport check_gorenstein_transfer_backward(ContextPtr const& ctx, Corner corner,
                                               DeltaComplex const& c, DeltaModule const& dm,
                                               ComponentClasses const& cc, std::size_t w,
                                               std::size_t bound,
                                               std::size_t cutoff = kInjectiveDimensionCutoff);

/// Ding projectivity of x carried to T(x), tested against flat tuples.
CheckReport check_ding_transfer(ContextPtr const& ctx, Corner corner, Module const& x,
                                std::size_t w, std::size_t bound);

std::string to_string(Corner c);

}  // namespace morita

#endif  // MORITA_GORENSTEIN_HPP_
