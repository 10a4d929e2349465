#pragma once

#include <vector>

#include "chopf/scalar.hpp"

namespace chopf {

/// Dense row-major matrix over the rationals.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(std::size_t n);
/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(Matrix m);
/// Inverse of a square matrix; throws DomainError if singular.
Matrix inverse(const Matrix& m);
/// Row vector times matrix.
std::vector<Scalar> row_times(const std::vector<Scalar>& v, const Matrix& m);

} // namespace chopf
