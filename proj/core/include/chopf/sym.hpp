#pragma once

#include "chopf/element.hpp"
#include "chopf/multipoly.hpp"

namespace chopf {

/// Re-expresses a symmetric function in another of the e/h/p/m bases.
/// Converting an integral element to the p basis throws DomainError when the
/// result is not integral (the p_lambda only span S* over the rationals).
Element sym_convert(const Element& f, Basis to);

/// Same as sym_convert but never rejects rational results.
Element sym_convert_rational(const Element& f, Basis to);

/// m_a * m_b expressed in the m basis.
Element sym_mul_monomial_words(const Word& a, const Word& b);

/// Binomial coproduct: e(T), h(T) grouplike, p_k primitive. Both tensor
/// factors are in the input basis.
Tensor sym_coproduct(const Element& f);

/// Antipode; on generators chi(e_n) = sum over compositions I of n of (-1)^r(I) e_I.
Element sym_antipode(const Element& f);

/// Hall inner product with <h_lambda, m_mu> = delta.
Scalar hall_pair(const Element& f, const Element& g);

/// The literal symmetric polynomial in x_1..x_N. Faithful when N >= weight.
MultiPoly sym_expand(const Element& f, int nvars);

/// Reads a symmetric polynomial back as an m-basis element.
Element sym_from_polynomial(const MultiPoly& poly);

enum class SymInvolution { dual, whitney, omega };

/// dual: e_k -> (-1)^k e_k (result in e basis); whitney: e_k -> (-1)^k h_k and
/// omega: e_k -> h_k (results in h basis). Each extended as an algebra map.
Element sym_involution(const Element& f, SymInvolution which);

/// Equality of symmetric functions given in possibly different bases.
bool sym_equal(const Element& a, const Element& b);

} // namespace chopf
