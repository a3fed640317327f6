#pragma once

#include "aatkit/polynomial.hpp"
#include "aatkit/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aatkit {

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x_minus(const Rational& r) { return UPoly({-r, Rational(1)}); }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
};

// Quotient and remainder; throws invalid_input on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);
std::vector<UPoly> sturm_sequence(const UPoly& p);
// Distinct real roots of p in (a, b].
std::size_t count_roots(const std::vector<UPoly>& sturm, const Rational& a, const Rational& b);
// Distinct real roots of p in [a, b].
std::size_t count_roots_closed(const UPoly& p, const Rational& a, const Rational& b);

/// Rational interval holding exactly one root; lo == hi means the root is
/// that rational. Otherwise the endpoints are not roots.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Isolating intervals for the distinct real roots of p, increasing.
std::vector<RootInterval> isolate_real_roots(const UPoly& p);
// Bisects until width <= w; p must be squarefree with the root isolated.
RootInterval refine(const UPoly& p, RootInterval iv, const Rational& w);

/// Real algebraic number: the unique root of a squarefree poly in an
/// isolating interval.
struct AlgebraicNumber {
  UPoly poly;
  RootInterval where;

  static AlgebraicNumber rational(const Rational& r) { return {UPoly::x_minus(r), {r, r}}; }
  bool is_rational() const { return where.exact(); }
  std::string describe() const;
};

// -1, 0, 1 for x < a, x == a, x > a.
int compare(const Rational& x, AlgebraicNumber& a);

// ---------------------------------------------------------------------------

/// P(x, y) over Q, squarefree in y, on the closed interval [a, b].
struct BranchProblem {
  Polynomial p;  // variables (x, y)
  Rational a;
  Rational b;
};

// Checks the problem invariants; throws invalid_input.
void validate_problem(const BranchProblem& problem);

// P(x0, y) as a polynomial in y.
UPoly fiber(const Polynomial& p, const Rational& x0);

/// Isolating intervals for the real roots of P(x0, y); throws
/// degenerate_fiber when P(x0, y) vanishes identically.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& x0);

struct Cell1D {
  enum Kind { point, open_interval } kind = point;
  AlgebraicNumber left;   // the point itself for point cells
  AlgebraicNumber right;  // unused for point cells
  Rational sample;        // rational interior point (interval cells)
  std::size_t count = 0;  // real roots of the fiber on this cell
};

// lc_y(P) * disc_y(P) as a polynomial in x.
UPoly critical_polynomial(const Polynomial& p);

/// Points at a, b and the critical roots inside, with the open intervals
/// between them; root counts per cell.
std::vector<Cell1D> cell_partition(const BranchProblem& problem);

struct BranchHandle {
  std::size_t cell = 0;
  std::size_t branch = 0;  // 1-based, increasing y
};

BranchHandle identify_branch(const BranchProblem& problem, const std::vector<Cell1D>& cells, const Rational& x0,
                             const Rational& ylo, const Rational& yhi);

RootInterval evaluate_branch(const BranchProblem& problem, const std::vector<Cell1D>& cells, const BranchHandle& h,
                             const Rational& x, const Rational& width);

}  // namespace aatkit
