#include "aatkit/exact_linalg.hpp"

#include <algorithm>

namespace aatkit {

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, Integer(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

GaussInt divexact(const GaussInt& a, const GaussInt& b) {
  if (sgn(b.im) == 0) return {ring_divexact(a.re, b.re), ring_divexact(a.im, b.re)};
  // a / b = a * conj(b) / |b|^2
  const Integer n = b.re * b.re + b.im * b.im;
  const GaussInt num = a * GaussInt{b.re, -b.im};
  return {ring_divexact(num.re, n), ring_divexact(num.im, n)};
}

Polynomial ring_divexact(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(ErrorCode::internal, "fraction-free elimination hit an inexact polynomial division");
  return *std::move(q);
}

std::vector<std::size_t> bareiss_forward_integer(RingMatrix<Integer>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  Integer prev(1), tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer piv = a[r][c];
    const bool unit_prev = prev == 1;
    // nonzero columns of the pivot row past c
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(a[r][j]) != 0) nz.push_back(j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& row = a[i];
      const Integer f = row[c];
      const bool has_f = sgn(f) != 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (sgn(row[j]) == 0) continue;
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
      }
      if (has_f)
        for (std::size_t j : nz) mpz_submul(row[j].get_mpz_t(), f.get_mpz_t(), a[r][j].get_mpz_t());
      if (!unit_prev)
        for (std::size_t j = c + 1; j < cols; ++j)
          if (sgn(row[j]) != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      row[c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace {

ExactScalar to_scalar(const Integer& x) { return ExactScalar(Rational(x)); }
ExactScalar to_scalar(const GaussInt& x) { return ExactScalar(Rational(x.re), Rational(x.im)); }

template <class R>
std::vector<ExactScalar> kernel_vector_impl(const RingMatrix<R>& u, const std::vector<std::size_t>& pivots,
                                            std::size_t free_col) {
  const std::size_t cols = u.empty() ? free_col + 1 : u.front().size();
  std::vector<ExactScalar> v(cols);
  v[free_col] = 1;
  // rows whose pivot lies right of free_col force their pivot unknown to 0
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t p = pivots[k];
    if (p > free_col) continue;
    if (p == free_col) fail(ErrorCode::internal, "kernel vector requested for a pivot column");
    ExactScalar acc(0);
    for (std::size_t j = p + 1; j <= free_col; ++j)
      if (!ring_is_zero(u[k][j]) && !v[j].is_zero()) acc.add_product(to_scalar(u[k][j]), v[j]);
    v[p] = -acc / to_scalar(u[k][p]);
  }
  return v;
}

}  // namespace

std::vector<ExactScalar> echelon_kernel_vector(const RingMatrix<Integer>& echelon,
                                               const std::vector<std::size_t>& pivots, std::size_t free_col) {
  return kernel_vector_impl(echelon, pivots, free_col);
}

std::vector<ExactScalar> echelon_kernel_vector(const RingMatrix<GaussInt>& echelon,
                                               const std::vector<std::size_t>& pivots, std::size_t free_col) {
  return kernel_vector_impl(echelon, pivots, free_col);
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  RingMatrix<Integer> a;
  for (const auto& row : m) {
    Integer den(1);
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(x.get_num() * (den / x.get_den()));
    a.push_back(std::move(r));
  }
  return bareiss_forward_integer(a, cols).size();
}

// ---------------------------------------------------------------------------

HermiteForm hermite_normal_form(IntMatrix m, std::size_t cols) {
  HermiteForm h;
  std::size_t r = 0;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-combine all rows below r into row r at column c
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      if (sgn(m[r][c]) == 0) {
        std::swap(m[r], m[i]);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][c].get_mpz_t(), m[i][c].get_mpz_t());
      const Integer a = m[r][c] / g, b = m[i][c] / g;
      for (std::size_t j = c; j < cols; ++j) {
        const Integer x = m[r][j], y = m[i][j];
        m[r][j] = s * x + t * y;
        m[i][j] = a * y - b * x;
      }
    }
    if (sgn(m[r][c]) == 0) continue;
    if (sgn(m[r][c]) < 0)
      for (std::size_t j = c; j < cols; ++j) m[r][j] = -m[r][j];
    // reduce rows above into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    h.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);
  h.rows = std::move(m);
  return h;
}

std::optional<std::vector<Integer>> lattice_coordinates(const HermiteForm& h, std::vector<Integer> v) {
  std::vector<Integer> coords(h.rows.size());
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    const std::size_t c = h.pivot_cols[k];
    if (!mpz_divisible_p(v[c].get_mpz_t(), h.rows[k][c].get_mpz_t())) return std::nullopt;
    coords[k] = v[c] / h.rows[k][c];
    if (sgn(coords[k]) == 0) continue;
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= coords[k] * h.rows[k][j];
  }
  for (const auto& x : v)
    if (sgn(x) != 0) return std::nullopt;
  return coords;
}

std::vector<Integer> smith_invariants(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // choose the smallest nonzero entry in the remaining block as pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m[i][j]) != 0 && (pi == rows || mpz_cmpabs(m[i][j].get_mpz_t(), m[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        const Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        const Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (sgn(m[t][j]) != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility condition d_t | every remaining entry
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
            break;
          }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace aatkit
