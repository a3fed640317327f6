#pragma once

#include "aatkit/error.hpp"
#include "aatkit/polynomial.hpp"
#include "aatkit/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace aatkit {

/// Gaussian integer a + b i.
struct GaussInt {
  Integer re{0};
  Integer im{0};

  bool is_zero() const noexcept { return sgn(re) == 0 && sgn(im) == 0; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
// Exact quotient; the caller guarantees divisibility in Z[i].
GaussInt divexact(const GaussInt& a, const GaussInt& b);

inline bool ring_is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const GaussInt& x) { return x.is_zero(); }
inline bool ring_is_zero(const Polynomial& x) { return x.is_zero(); }

inline Integer ring_divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline GaussInt ring_divexact(const GaussInt& a, const GaussInt& b) { return divexact(a, b); }
Polynomial ring_divexact(const Polynomial& a, const Polynomial& b);

template <class R>
using RingMatrix = std::vector<std::vector<R>>;

/// Fraction-free (Bareiss) forward elimination in place. Pivot search runs
/// over columns left to right and picks the first row with a nonzero entry,
/// so the result depends only on the input. Returns the pivot columns; the
/// first `rank` rows of `a` hold the echelon form. Every division performed
/// is exact in the coefficient ring.
template <class R>
std::vector<std::size_t> bareiss_forward(RingMatrix<R>& a, std::size_t cols, const R& one) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  R prev = one;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && ring_is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const R piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const R f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (ring_is_zero(f)) {
          if (!ring_is_zero(a[i][j])) a[i][j] = ring_divexact(piv * a[i][j], prev);
        } else {
          a[i][j] = ring_divexact(piv * a[i][j] - f * a[r][j], prev);
        }
      }
      a[i][c] = R{};
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// In-place specialization with GMP primitives for integer matrices.
std::vector<std::size_t> bareiss_forward_integer(RingMatrix<Integer>& a, std::size_t cols);

template <class R>
std::size_t bareiss_rank(RingMatrix<R> a, std::size_t cols, const R& one) {
  return bareiss_forward(a, cols, one).size();
}

/// Kernel vector of an echelon form attached to free column `free_col`:
/// entry free_col is 1, other free columns are 0.
std::vector<ExactScalar> echelon_kernel_vector(const RingMatrix<Integer>& echelon,
                                               const std::vector<std::size_t>& pivots,
                                               std::size_t free_col);
std::vector<ExactScalar> echelon_kernel_vector(const RingMatrix<GaussInt>& echelon,
                                               const std::vector<std::size_t>& pivots,
                                               std::size_t free_col);

// Rank over Q of a rational matrix (rows scaled to integers, then Bareiss).
std::size_t rational_rank(const std::vector<std::vector<Rational>>& m);

// ---------------------------------------------------------------------------
// Integer lattices (row convention: the lattice is spanned by the rows).

using IntMatrix = std::vector<std::vector<Integer>>;

/// Row-style Hermite normal form: nonzero rows only, positive pivots,
/// entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix rows;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite_normal_form(IntMatrix m, std::size_t cols);

/// Integer coordinates of v in the HNF basis, or nullopt when v is not in
/// the lattice.
std::optional<std::vector<Integer>> lattice_coordinates(const HermiteForm& h, std::vector<Integer> v);

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(IntMatrix m, std::size_t cols);

}  // namespace aatkit
