#ifndef MORITA_FUNCTORS_HPP_
#define MORITA_FUNCTORS_HPP_

#include <string>

#include "morita/morita.hpp"

namespace morita {

/// T_A(X) = (X, M (x) X, 1, 0) and T_B(Y) = (N (x) Y, Y, 0, 1).
DeltaModule t_a(ContextPtr ctx, Module const& x);
DeltaModule t_b(ContextPtr ctx, Module const& y);
DeltaModuleMap t_a_map(ContextPtr ctx, ModuleMap const& a);
DeltaModuleMap t_b_map(ContextPtr ctx, ModuleMap const& b);

Module u_a(DeltaModule const& dm);
Module u_b(DeltaModule const& dm);

/// H_A(X) = (X, Hom_A(N, X), 0, e_X) and H_B(Y) = (Hom_B(M, Y), Y, e_Y, 0).
DeltaModule h_a(ContextPtr ctx, Module const& x);
DeltaModule h_b(ContextPtr ctx, Module const& y);
DeltaModuleMap h_a_map(ContextPtr ctx, ModuleMap const& a);
DeltaModuleMap h_b_map(ContextPtr ctx, ModuleMap const& b);

/// Evaluation N (x)_B Hom_A(N, X) -> X, n (x) phi -> phi(n), on quotient
/// coordinates.
struct EvaluationMap {
  TensorProduct source;
  HomModule hom;
  Mat matrix;
};
EvaluationMap evaluation_a(ContextPtr ctx, Module const& x);
EvaluationMap evaluation_b(ContextPtr ctx, Module const& y);

/// f~ : X -> Hom_B(M, Y) with f~(x)(m) = f(m (x) x), in the coordinates of
/// hom_over_algebra(M, Y); g~ : Y -> Hom_A(N, X) likewise.
struct TildeMap {
  HomModule hom;
  Mat matrix;
};
TildeMap tilde_f(DeltaModule const& dm);
TildeMap tilde_g(DeltaModule const& dm);

/// Inverse transforms back to f (resp. g) on quotient coordinates. Throw
/// ValidationError when the input is not an intertwiner.
Mat untilde_f(ContextPtr const& view, Module const& x, Module const& y, Mat const& phi);
Mat untilde_g(ContextPtr const& view, Module const& x, Module const& y, Mat const& psi);

enum class AdjointPair { t_u, u_h };

/// Hom_Delta(T_A x, v) = Hom_A(x, U_A v) or Hom_A(U_A v, x) = Hom_Delta(v, H_A x),
/// checked by dimension and by the explicit bijection on bases.
CheckReport check_adjunction(AdjointPair pair, ContextPtr ctx, Module const& x,
                             DeltaModule const& v);

std::string to_string(AdjointPair pair);

}  // namespace morita

#endif  // MORITA_FUNCTORS_HPP_
