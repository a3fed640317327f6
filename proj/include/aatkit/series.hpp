#pragma once

#include "aatkit/matrix.hpp"
#include "aatkit/multi_index.hpp"
#include "aatkit/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aatkit {

struct SeriesTerm {
  MultiIndex index;
  ExactScalar coeff;
};

/// Multivariate power series with exact coefficients, known modulo all
/// monomials of total degree >= order.
///
/// Terms are kept sorted in canonical graded-lex order with no zero
/// coefficients and nothing at or above the truncation order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(std::size_t vars, unsigned order) : vars_(vars), order_(order) {}

  // Drops zeros and out-of-range terms, merges duplicates.
  static TruncatedSeries from_terms(std::size_t vars, unsigned order, std::vector<SeriesTerm> terms);
  static TruncatedSeries constant(std::size_t vars, unsigned order, const ExactScalar& c);
  // The coordinate series x_which.
  static TruncatedSeries variable(std::size_t vars, unsigned order, std::size_t which);
  // Univariate series from its coefficient list a_0, a_1, ...
  static TruncatedSeries univariate(unsigned order, std::span<const ExactScalar> coeffs);

  std::size_t vars() const noexcept { return vars_; }
  unsigned order() const noexcept { return order_; }
  const std::vector<SeriesTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  ExactScalar coeff(const MultiIndex& m) const;
  ExactScalar constant_term() const;
  // Coefficient list of a univariate series, padded to `order` entries.
  std::vector<ExactScalar> dense_univariate() const;

  TruncatedSeries truncated(unsigned order) const;
  // Same coefficients viewed in `vars` variables (new variables appended).
  TruncatedSeries widened(std::size_t vars) const;
  // Re-labels variable j as variable map[j] of a `vars`-variable ring.
  TruncatedSeries embedded(std::size_t vars, std::span<const std::size_t> map) const;
  // Variables with a nonzero exponent in some stored term, ascending.
  std::vector<std::size_t> support() const;
  // Keeps only the listed variables (in that order); every term must be free
  // of the others.
  TruncatedSeries restricted(std::span<const std::size_t> keep) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator*=(const ExactScalar& c);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // First nonzero coefficient in canonical order (for residual reports).
  std::optional<SeriesTerm> first_nonzero() const;

 private:
  std::size_t vars_ = 0;
  unsigned order_ = 0;
  std::vector<SeriesTerm> terms_;
};

enum class SeriesOp { add, sub, mul, pow };

// Result order is the minimum of the operand orders; throws variable_mismatch.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries pow(const TruncatedSeries& a, unsigned k);
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op,
                             unsigned k = 0);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
TruncatedSeries operator*(const ExactScalar& c, TruncatedSeries s);

// Multiplicative inverse; the constant term must be nonzero.
TruncatedSeries reciprocal(const TruncatedSeries& a);
// Partial derivative with respect to variable `var`; order drops by one.
TruncatedSeries derivative(const TruncatedSeries& a, std::size_t var);

/// s(inner_1, ..., inner_k). Every inner series must have zero constant term;
/// the result order is min(s.order, inner orders).
TruncatedSeries compose(const TruncatedSeries& s, std::span<const TruncatedSeries> inner);

/// s(u_1 + v_1, ..., u_k + v_k) in 2k variables ordered (u..., v...), exact
/// to total degree `order`. Throws order_exceeded if order > s.order().
TruncatedSeries block_sum_substitute(const TruncatedSeries& s, unsigned order);

/// s(-u): coefficient of index e is multiplied by (-1)^|e|.
TruncatedSeries negate_argument(const TruncatedSeries& s);

// ---------------------------------------------------------------------------

enum class OdeKind { exp, sin, cos, tan, weierstrass_p, weierstrass_p_prime, custom };

std::string_view ode_kind_name(OdeKind k) noexcept;
OdeKind parse_ode_kind(std::string_view s);

/// Bivariate polynomial Q(y, y') given as sparse terms [e_y, e_dy] -> c.
struct OdePolynomial {
  std::vector<std::pair<std::pair<unsigned, unsigned>, ExactScalar>> terms;
};

struct OdeSpec {
  OdeKind kind = OdeKind::exp;
  // weierstrass_p / weierstrass_p_prime
  ExactScalar g2{0};
  ExactScalar g3{0};
  ExactScalar p0{0};
  ExactScalar p1{0};
  // custom: lead(y) * y'' = rhs(y, y'), lead defaults to 1
  OdePolynomial rhs;
  std::vector<ExactScalar> lead;  // coefficients of lead(y), low degree first
  ExactScalar y0{0};
  ExactScalar dy0{0};

  static OdeSpec weierstrass(ExactScalar g2, ExactScalar g3, ExactScalar p0, ExactScalar p1,
                             bool derivative = false);
  std::string describe() const;
};

// Throws curve_equation_violated when p1^2 != 4 p0^3 - g2 p0 - g3.
void validate_ode_spec(const OdeSpec& spec);

/// Taylor expansion at the base point to the given order, by the exact
/// coefficient recurrence of the defining ODE.
TruncatedSeries generate_series(const OdeSpec& spec, unsigned order);

// ---------------------------------------------------------------------------

/// Chart germ phi = (phi_1, ..., phi_n) at a regular base point.
class GermMap {
 public:
  GermMap() = default;
  GermMap(std::vector<TruncatedSeries> components, Field field, std::string provenance);

  std::size_t dimension() const noexcept { return components_.size(); }
  unsigned order() const noexcept { return components_.empty() ? 0 : components_.front().order(); }
  Field field() const noexcept { return field_; }
  const std::string& provenance() const noexcept { return provenance_; }
  const std::vector<TruncatedSeries>& components() const noexcept { return components_; }
  const TruncatedSeries& operator[](std::size_t i) const { return components_[i]; }

  GermMap truncated(unsigned order) const;

 private:
  std::vector<TruncatedSeries> components_;
  Field field_ = Field::rat;
  std::string provenance_;
};

// Product germ: component i is `factors[i]` (univariate) in variable i.
GermMap product_germ(std::span<const TruncatedSeries> factors, Field field, std::string provenance);



// Degree-one coefficients: entry (i, j) is d phi_i / d u_j at 0.
ScalarMatrix linear_part(const GermMap& m);

// True iff every coefficient is fixed by complex conjugation.
bool conjugation_fixed(const GermMap& m);

// (g o alpha)(u) = g(alpha u), alpha acting on column vectors.
GermMap compose_linear(const GermMap& g, const ScalarMatrix& alpha);

/// Compositional inverse of a germ with zero constant term and invertible
/// linear part, to the germ's order.
GermMap reversion(const GermMap& m);

}  // namespace aatkit
