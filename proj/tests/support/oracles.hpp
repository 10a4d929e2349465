#pragma once

// Brute-force reference implementations used only by the tests. They work from
// definitions (explicit variables, explicit sums) and share no code paths with
// the library algorithms they check.

#include <gmpxx.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "chopf/element.hpp"
#include "chopf/multipoly.hpp"

namespace oracle {

using Word = std::vector<int>;
using Poly = std::map<std::vector<int>, mpq_class>; // exponent vector -> coefficient

Poly poly_mul(const Poly& a, const Poly& b);
void poly_add(Poly& a, const Poly& b, const mpq_class& scale = 1);
Poly from_multipoly(const chopf::MultiPoly& p);

/// Symmetric function basis elements as polynomials in n variables.
Poly e_poly(int k, int n);
Poly h_poly(int k, int n);
Poly p_poly(int k, int n);
Poly m_poly(const Word& lambda, int n);
/// Any e/h/p/m element, expanded generator by generator.
Poly sym_poly(const chopf::Element& f, int n);
/// M_I = sum over i_1 < ... < i_k of x_{i_1}^{I_1} ... x_{i_k}^{I_k}.
Poly monomial_qsym_poly(const Word& comp, int n);
Poly qsym_poly(const chopf::Element& f, int n);

std::vector<Word> all_compositions(int n);
std::vector<Word> all_partitions(int n);
/// Every composition obtained by summing runs of adjacent parts.
std::vector<Word> adjacent_coarsenings(const Word& comp);

/// chi(M_I) = (-1)^{l(I)} sum of M_J over coarsenings J of the reversed composition.
chopf::Element qsym_antipode_closed_form(const Word& comp);

/// Rank over Q by plain Gaussian elimination.
std::size_t rank(std::vector<std::vector<mpq_class>> m);
/// Solves A x = b for square invertible A.
std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b);

/// Coefficients of m_lambda in the e basis, found by expanding both sides in |lambda| variables.
std::map<Word, mpq_class> monomial_in_elementary(const Word& lambda);

/// binomial(-a, k) = (-1)^k binomial(a + k - 1, k).
mpq_class negative_binomial(int a, int k);

/// <m_lambda(nu), [CP^n]> for the normal bundle nu with total Chern class (1 + x)^{-(n+1)}.
mpq_class normal_bundle_number(int n, const Word& lambda);

/// Dimension of the kernel of psi - eta_L on weight-w elements of S* (e basis), where
/// psi(e_n) = sum_k e_k (x) [T^n] t(T)^k with t(T) = T + t_1 T^2 + ....
std::size_t invariant_kernel_dimension(int weight);

/// Random element with integer coefficients in [-9, 9], weight at most max_weight.
chopf::Element random_element(std::mt19937& rng, chopf::Space space, int max_weight, int max_terms);

} // namespace oracle
