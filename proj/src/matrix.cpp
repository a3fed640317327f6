#include "aatkit/matrix.hpp"

#include "aatkit/error.hpp"

#include <utility>

namespace aatkit {

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, std::vector<ExactScalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_square(const ScalarMatrix& a, std::size_t n) {
  if (a.size() != n) return false;
  for (const auto& row : a)
    if (row.size() != n) return false;
  return true;
}

ExactScalar determinant(ScalarMatrix a) {
  const std::size_t n = a.size();
  if (!is_square(a, n)) fail(ErrorCode::invalid_input, "determinant of a non-square matrix");
  ExactScalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return ExactScalar(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const ExactScalar inv = ExactScalar(1) / a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const ExactScalar f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

ScalarMatrix inverse(const ScalarMatrix& in) {
  const std::size_t n = in.size();
  if (!is_square(in, n)) fail(ErrorCode::invalid_input, "inverse of a non-square matrix");
  ScalarMatrix a = in;
  ScalarMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) fail(ErrorCode::singular_alpha, "matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const ExactScalar s = ExactScalar(1) / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= s;
      inv[c][k] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const ExactScalar f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

std::size_t matrix_rank(ScalarMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const ExactScalar inv = ExactScalar(1) / a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const ExactScalar f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b.front().size();
  ScalarMatrix c(n, std::vector<ExactScalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j].add_product(a[i][k], b[k][j]);
  return c;
}

std::vector<ExactScalar> apply(const ScalarMatrix& a, const std::vector<ExactScalar>& x) {
  std::vector<ExactScalar> y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i].add_product(a[i][j], x[j]);
  return y;
}

}  // namespace aatkit
