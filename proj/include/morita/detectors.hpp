#ifndef MORITA_DETECTORS_HPP_
#define MORITA_DETECTORS_HPP_

#include <optional>

#include "morita/functors.hpp"
#include "morita/report.hpp"

namespace morita {

/// Two independent routes to the same question about a tuple. `packed` runs
/// the generic module test on the packed Delta-module; `structural` works on
/// the components only. Callers compare them.
struct DeltaVerdict {
  bool packed = false;
  bool structural = false;
  /// Component modules (P, Q) of the decomposition when `structural` holds.
  std::optional<Module> first;
  std::optional<Module> second;

  bool agree() const noexcept { return packed == structural; }
};

/// dm = T_A(P) (+) T_B(Q) with P = X / im g and Q = Y / im f projective.
DeltaVerdict is_projective_delta(DeltaModule const& dm);
/// dm = H_A(I) (+) H_B(J) with I = ker f~ and J = ker g~ injective.
DeltaVerdict is_injective_delta(DeltaModule const& dm);

/// f and g injective with flat cokernels.
bool is_flat_structural(DeltaModule const& dm);
/// Structural verdict; throws ConsistencyError when the packed test disagrees.
bool is_flat_delta(DeltaModule const& dm);

/// X / im g and Y / im f.
QuotientResult cokernel_of_g(DeltaModule const& dm);
QuotientResult cokernel_of_f(DeltaModule const& dm);
/// ker f~ inside X and ker g~ inside Y.
SubmoduleResult kernel_of_tilde_f(DeltaModule const& dm);
SubmoduleResult kernel_of_tilde_g(DeltaModule const& dm);

/// delta_dual(dm) is isomorphic to the unpacked character module of
/// pack(dm), on every enumerated tuple of both sides.
CheckReport check_character_tuples(ContextPtr const& ctx, std::size_t bound);

/// Packed and structural verdicts coincide for projectivity, injectivity
/// and flatness on every enumerated left tuple.
CheckReport check_detector_agreement(ContextPtr const& ctx, std::size_t bound);

}  // namespace morita

#endif  // MORITA_DETECTORS_HPP_
