#ifndef MORITA_CLASSES_HPP_
#define MORITA_CLASSES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morita/detectors.hpp"
#include "morita/enumerate.hpp"

namespace morita {

/// Membership predicate for a class of modules over one algebra and side.
struct ClassOracle {
  std::string name;
  AlgebraPtr algebra;
  Side side = Side::left;
  std::function<bool(Module const&)> member;
  /// Members up to a dimension bound; when empty, the enumeration filtered
  /// by `member`.
  std::function<std::vector<Module>(std::size_t)> sampler;

  /// Accepts modules on the oracle's side, or left modules over the opposite
  /// algebra standing for them. Throws MismatchError otherwise.
  bool contains(Module const& m) const;
  /// Enumerated members up to a dimension bound.
  std::vector<Module> sample(std::size_t bound) const;
};

enum class BuiltinClass { projective, injective, flat, fp_injective, all };

std::optional<BuiltinClass> parse_builtin_class(std::string const& name);
std::string to_string(BuiltinClass c);

/// Flat coincides with projective and FP-injective with injective over a
/// finite-dimensional algebra.
ClassOracle builtin_oracle(AlgebraPtr algebra, Side side, BuiltinClass kind);
std::vector<ClassOracle> builtin_oracles(AlgebraPtr const& algebra, Side side);

/// Zero is a member and membership is invariant under a change of basis,
/// on every enumerated module.
CheckReport check_oracle(ClassOracle const& oracle, std::size_t bound);

/// Modules isomorphic to a listed one, and zero.
ClassOracle list_oracle(std::string name, AlgebraPtr algebra, Side side,
                        std::vector<Module> members);

/// The three ways to build a class of tuples from classes C (over A) and
/// D (over B): componentwise (X in C, Y in D), monic (f, g injective with
/// cokernels in C and D) and epic (f~, g~ surjective with kernels in C and D).
enum class DeltaClass { componentwise, monic, epic };

std::string to_string(DeltaClass k);
std::optional<DeltaClass> parse_delta_class(std::string const& letter);

bool in_componentwise_class(DeltaModule const& dm, ClassOracle const& c, ClassOracle const& d);
bool in_monic_class(DeltaModule const& dm, ClassOracle const& c, ClassOracle const& d);
bool in_epic_class(DeltaModule const& dm, ClassOracle const& c, ClassOracle const& d);
bool in_delta_class(DeltaClass kind, DeltaModule const& dm, ClassOracle const& c,
                    ClassOracle const& d);

/// A class of tuples: construction kind plus component oracles. The side of
/// the tuples is the side of the oracles.
struct DeltaClassSpec {
  DeltaClass kind;
  ClassOracle c;
  ClassOracle d;

  Side side() const noexcept { return c.side; }
  bool contains(DeltaModule const& dm) const { return in_delta_class(kind, dm, c, d); }
  std::string describe() const;
};

// ---------------------------------------------------------------------------
// Duality pairs of modules

struct DualityPairSpec {
  ClassOracle first;
  ClassOracle second;
  std::size_t bound = 2;
};

/// X in first <=> X+ in second over every enumerated X, and second closed
/// under finite sums and summands over enumerated pairs.
CheckReport verify_duality_pair(DualityPairSpec const& spec);
/// Both orientations.
CheckReport check_symmetric(DualityPairSpec const& spec);
/// Duality pair whose first class contains the regular module and is closed
/// under finite sums and under extensions.
CheckReport check_perfect_pair(DualityPairSpec const& spec);
/// Symmetric and perfect.
CheckReport check_complete(DualityPairSpec const& spec);

/// Second halves of two complete duality pairs sharing the first half agree
/// on every enumerated module.
CheckReport check_uniqueness(ClassOracle const& first, ClassOracle const& second_a,
                             ClassOracle const& second_b, std::size_t bound);

/// dim Tor_1^A(m, x) for a bimodule m and a left module x, from a free
/// presentation of x.
std::size_t tor1_dim(Bimodule const& m, Module const& x);

// ---------------------------------------------------------------------------
// Duality pairs of tuples

struct DeltaPairSpec {
  ContextPtr ctx;
  DeltaClassSpec first;
  DeltaClassSpec second;
  std::size_t bound = 2;
};

CheckReport verify_delta_duality_pair(DeltaPairSpec const& spec);
CheckReport check_delta_symmetric(DeltaPairSpec const& spec);
CheckReport check_delta_perfect_pair(DeltaPairSpec const& spec);
CheckReport check_delta_complete(DeltaPairSpec const& spec);

/// Component classes (C1, C2) over A and (D1, D2) over B.
struct ComponentClasses {
  ClassOracle c1, c2, d1, d2;
};

/// The builtin pair (flat, FP-injective) on both algebras of the context.
ComponentClasses flat_fp_injective_classes(ContextPtr const& ctx);

DeltaPairSpec monic_epic_pair(ContextPtr const& ctx, ComponentClasses const& cc,
                              std::size_t bound);
DeltaPairSpec componentwise_pair(ContextPtr const& ctx, ComponentClasses const& cc,
                                 std::size_t bound);
DeltaPairSpec epic_monic_pair(ContextPtr const& ctx, ComponentClasses const& cc,
                              std::size_t bound);

/// T_A, T_B, H_A, H_B and the character module carry membership of
/// components to membership of tuples, eight biconditionals in all.
CheckReport check_functor_class_correspondence(ContextPtr const& ctx, ComponentClasses const& cc,
                                               std::size_t bound);

/// Component pairs are duality pairs <=> monic/epic pair is <=> the
/// componentwise pair is <=> the epic/monic pair is.
CheckReport check_duality_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                   std::size_t bound);

/// Symmetric duality pairs transfer in each of the three constructions.
CheckReport check_symmetric_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                     std::size_t bound);

/// Perfect duality pairs transfer to the monic/epic pair under Tor_1
/// vanishing, and to the componentwise pair exactly when M lies in D1 and N
/// in C1.
CheckReport check_perfect_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                   std::size_t bound);

/// Complete duality pairs transfer likewise.
CheckReport check_complete_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                    std::size_t bound);

/// Right tuples: injective packed module <=> f~, g~ surjective with
/// injective kernels.
CheckReport check_fp_injective_characterization(ContextPtr const& ctx, std::size_t bound);

/// Flat tuples against the monic class, and the two candidate second halves
/// (epic class of FP-injectives, injective packed modules) on right tuples.
CheckReport check_delta_uniqueness(ContextPtr const& ctx, std::size_t bound);

}  // namespace morita

#endif  // MORITA_CLASSES_HPP_
