#pragma once

#include "chopf/element.hpp"
#include "chopf/multipoly.hpp"

namespace chopf {

// ---- N*: free associative algebra on Z_1, Z_2, ... --------------------------

/// Binomial coproduct Delta Z_n = sum_{i+j=n} Z_i (x) Z_j (Z_0 = 1), multiplicative.
Tensor nsym_binomial_coproduct(const Element& f);

/// chi(Z_n) = sum_{|I|=n} (-1)^r(I) Z_I, extended as an antimorphism.
Element nsym_binomial_antipode(const Element& f);

/// Z_I -> e_sort(I).
Element abelianize_nsym(const Element& f);

// ---- Q*: quasisymmetric functions, monomial basis M_I -----------------------

/// Quasi-shuffle (overlapping shuffle) product M_a * M_b.
Element quasi_shuffle(const Composition& a, const Composition& b);

/// Deconcatenation Delta M_I = sum_{I = J.K} M_J (x) M_K.
Tensor qsym_coproduct(const Element& f);

/// Antipode from the recursion chi(x) = -x - sum chi(x') x'' over the reduced coproduct.
Element qsym_antipode(const Element& f);

/// m_lambda -> sum over rearrangements I of lambda of M_I (after converting to the m basis).
Element include_sym_in_qsym(const Element& f);

/// M_I in ordered variables x_1 < ... < x_N.
MultiPoly qsym_expand(const Element& f, int nvars);

/// Reads a quasisymmetric polynomial back in the M basis (coefficients of packed monomials).
Element qsym_from_polynomial(const MultiPoly& poly);

// ---- duality -------------------------------------------------------------------

/// <Z_I, M_J> = delta_IJ, bilinear.
Scalar ns_qs_pair(const Element& f, const Element& g);

/// Factorwise pairing of an N*-tensor against a Q*-tensor of the same arity.
Scalar ns_qs_pair(const Tensor& f, const Tensor& g);

} // namespace chopf
