#pragma once

#include "chopf/element.hpp"
#include "chopf/series.hpp"

namespace chopf {

/// Generic diffeomorphism t(T) = T + t_1 T^2 + ... (t_0 = 1), truncated at `cap`,
/// in the fdb algebra with letter t or b.
Series fdb_generic_series(Space space, int cap);

/// Generic noncommutative diffeomorphism Z(T) = T + Z_1 T^2 + ... (Z_0 = 1).
Series nsym_generic_series(int cap);

// ---- Faa di Bruno Hopf algebra --------------------------------------------------

/// Delta t_n = [T^(n+1)] sum_k t_(k-1) (x) t(T)^k, i.e. the composite (t (x) 1)((1 (x) t)(T)).
Tensor fdb_coproduct(const Element& f);

/// chi(t_n) = [T^(n+1)] of the compositional inverse of t(T); extended as an algebra map.
Element fdb_antipode(const Element& f);

// ---- BFK renormalization Hopf algebra (on the algebra N*) ----------------------

/// Delta_N Z_n = sum_(k>=1) res_U(U^(-k-1) Z(U)) (x) [T^(n+1)] Z(T)^k, multiplicative.
Tensor bfk_coproduct(const Element& f);

/// Antipode from the recursion chi(x) = -x - sum chi(x') x'' on generators,
/// extended as an antimorphism.
Element bfk_antipode(const Element& f);

/// Z_I -> t_sort(I) (or b_sort(I) with letter b).
Element bfk_abelianize(const Element& f, Basis letter = Basis::t);

// ---- coactions ---------------------------------------------------------------------

/// psi_S(e_n) = [T^n] e(t(T)) in S* (x) B; algebra map. The S* factor keeps the input basis.
Tensor coaction_sym(const Element& f);

/// psi_N = Delta_N regarded as a coaction N* -> N* (x) N.
Tensor coaction_nsym(const Element& f);

} // namespace chopf
