#pragma once

#include "aatkit/scalar.hpp"

#include <vector>

namespace aatkit {

using ScalarMatrix = std::vector<std::vector<ExactScalar>>;

// Small dense matrices over Q(i) with ordinary fraction arithmetic.
ScalarMatrix identity_matrix(std::size_t n);
ExactScalar determinant(ScalarMatrix a);
// Throws singular_alpha when the matrix is not invertible.
ScalarMatrix inverse(const ScalarMatrix& a);
std::size_t matrix_rank(ScalarMatrix a);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);
std::vector<ExactScalar> apply(const ScalarMatrix& a, const std::vector<ExactScalar>& x);
bool is_square(const ScalarMatrix& a, std::size_t n);

}  // namespace aatkit
