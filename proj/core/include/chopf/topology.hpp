#pragma once

#include <vector>

#include "chopf/element.hpp"
#include "chopf/index.hpp"
#include "chopf/series.hpp"

namespace chopf {

/// b(T) = sum_k b_k T^(k+1), b_0 = 1, over the b-lettered polynomial algebra.
Series b_series(int cap);

/// Miscenko logarithm: the compositional inverse of b(T).
Series miscenko_log(int cap);

/// F(X, Y) = b(log X + log Y), bivariate, truncated at total degree cap.
Series fgl(int cap);

/// exp(beta * log(T)) over the rationals; beta is the b-word [0].
Series beta_series(int cap);

/// The central generator beta as an element.
Element beta_element();

/// (n + 1) * chi(b_n) with chi the Faa di Bruno antipode.
Element cp_hurewicz(int n);

/// Coefficient of b_lambda in cp_hurewicz(n). DomainError unless |lambda| = n.
Scalar cp_char_number(int n, const Partition& lambda);

/// The same number from the stable normal bundle nu = -(n+1)H of CP^n:
/// m_lambda in power sums, p_k(nu) = -(n+1) x^k, top coefficient.
Scalar cp_normal_char_number(int n, const Partition& lambda);

/// Product of projective spaces with an ordered list of line bundle roots.
struct ProjectiveProductSpace {
    std::vector<int> factors;            // dimensions n_1..n_m
    std::vector<std::vector<int>> roots; // each root is a vector of length m

    /// DomainError on negative dimensions or roots of the wrong length.
    void validate() const;
    [[nodiscard]] int dimension() const;
};

enum class CharConvention { tangential, normal };

/// nu_!(M_I(roots)) in the truncated cohomology ring. The normal convention
/// evaluates chi(M_I) on the same roots and multiplies by (-1)^|I|.
Scalar quasitoric_char_number(const ProjectiveProductSpace& x, const Composition& index,
                              CharConvention convention = CharConvention::tangential);

/// Evaluates an arbitrary Q* element the same way (tangential).
Scalar quasitoric_evaluate(const ProjectiveProductSpace& x, const Element& f);

/// sum_{|I| = k} Z_I.
Element crn_invariant(int k);

/// (chi_N Z)(-T).
Series cumulant_series(int cap);

/// sum_k Z_k ((chi_N Z)(X) + (chi_N Z)(Y))^(k+1), bivariate.
Series cp_infinity_coproduct(int cap);

} // namespace chopf
