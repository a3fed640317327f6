#pragma once

#include "aatkit/multi_index.hpp"
#include "aatkit/scalar.hpp"
#include "aatkit/series.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aatkit {

/// Sparse multivariate polynomial over Q(i).
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, ExactScalar, GradedBefore>;

  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const ExactScalar& c);
  static Polynomial variable(std::size_t vars, std::size_t which);
  static Polynomial monomial(const MultiIndex& m, const ExactScalar& c);

  std::size_t vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  ExactScalar coeff(const MultiIndex& m) const;

  // Adds c * x^m.
  void add_term(const MultiIndex& m, const ExactScalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const ExactScalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const ExactScalar& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  ExactScalar evaluate(std::span<const ExactScalar> point) const;
  // Substitutes polynomials for the variables.
  Polynomial substitute(std::span<const Polynomial> values) const;

  /// P(s_1, ..., s_k) as a truncated series; the order is the minimum of the
  /// series orders (or `order` when given and smaller).
  TruncatedSeries substitute(std::span<const TruncatedSeries> series,
                             std::optional<unsigned> order = std::nullopt) const;

  // Scaled to integer coefficients with no common rational integer factor.
  Polynomial primitive_part() const;
  bool is_real() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t vars_ = 0;
  TermMap terms_;
};

/// Leading monomial with respect to lexicographic order visiting variables
/// in `priority` order.
MultiIndex lex_leading(const Polynomial& p, std::span<const std::size_t> priority);

// Exact multivariate division; nullopt when `den` does not divide `num`.
std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

// Canonical form: primitive, and the lex-leading coefficient (variables
// visited in `priority` order) has positive real part (or is positive
// imaginary when the real part is zero).
Polynomial canonicalize(const Polynomial& p, std::span<const std::size_t> priority);

/// Parses sums of products of rationals, named variables, powers "^k" and
/// parentheses, e.g. "z^2 - 4*x1^2*(1 - x1^2)". Throws parse_error.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

std::vector<std::string> default_names(std::size_t vars, const std::string& prefix = "x");

}  // namespace aatkit
