#include "aatkit/branchres.hpp"

#include "aatkit/error.hpp"
#include "aatkit/matrix.hpp"

#include <algorithm>

namespace aatkit {

UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> d = c_;
  const Rational l = c_.back();
  for (auto& x : d) x /= l;
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& c, const UPoly& a) {
  std::vector<Rational> d = a.c_;
  for (auto& x : d) x *= c;
  return UPoly(std::move(d));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (sgn(c_[k]) == 0) continue;
    std::string coef = rational_string(abs(c_[k]));
    std::string term;
    if (k == 0) term = coef;
    else {
      term = coef == "1" ? "" : coef + "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (s.empty()) s = (sgn(c_[k]) < 0 ? "-" : "") + term;
    else s += (sgn(c_[k]) < 0 ? " - " : " + ") + term;
  }
  return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorCode::invalid_input, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = r[static_cast<std::size_t>(k)] / b.lead();
    if (sgn(f) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    UPoly r = divmod(s[s.size() - 2], s.back()).second;
    s.push_back(Rational(-1) * r);
  }
  s.pop_back();
  return s;
}

namespace {

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<UPoly>& sturm, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : sturm) signs.push_back(sgn(q(x)));
  return variations(signs);
}

// Strict bound on the absolute value of every real root.
Rational root_bound(const UPoly& p) {
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(k)] / p.lead())));
  return m + 1;
}

}  // namespace

std::size_t count_roots(const std::vector<UPoly>& sturm, const Rational& a, const Rational& b) {
  if (sturm.empty() || !(a < b)) return 0;
  const std::size_t va = variations_at(sturm, a), vb = variations_at(sturm, b);
  return va > vb ? va - vb : 0;
}

std::size_t count_roots_closed(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) fail(ErrorCode::invalid_input, "root count of the zero polynomial");
  if (b < a) return 0;
  const UPoly q = squarefree_part(p);
  return count_roots(sturm_sequence(q), a, b) + (sgn(q(a)) == 0 ? 1 : 0);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_input, "root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const UPoly q = squarefree_part(p);
  const auto sturm = sturm_sequence(q);
  const Rational B = root_bound(q);
  // (lo, hi] with non-root endpoints, visited left to right
  auto iso = [&](auto&& self, const Rational& lo, const Rational& hi, std::size_t c) -> void {
    if (c == 0) return;
    if (c == 1) {
      out.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(q(mid)) == 0) {
      Rational d = (hi - lo) / 4;
      while (sgn(q(mid - d)) == 0 || sgn(q(mid + d)) == 0 || count_roots(sturm, mid - d, mid + d) != 1) d /= 2;
      self(self, lo, mid - d, count_roots(sturm, lo, mid - d));
      out.push_back({mid, mid});
      self(self, mid + d, hi, count_roots(sturm, mid + d, hi));
      return;
    }
    self(self, lo, mid, count_roots(sturm, lo, mid));
    self(self, mid, hi, count_roots(sturm, mid, hi));
  };
  iso(iso, -B, B, count_roots(sturm, -B, B));
  // an interval that is a single rational root is reported exactly
  for (auto& iv : out)
    if (!iv.exact() && q.degree() == 1) {
      const Rational r = -q.coeffs()[0] / q.coeffs()[1];
      iv = {r, r};
    }
  return out;
}

RootInterval refine(const UPoly& p, RootInterval iv, const Rational& w) {
  while (!iv.exact() && iv.width() > w) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int sm = sgn(p(mid));
    if (sm == 0) return {mid, mid};
    if (sgn(p(iv.lo)) != sm) iv.hi = mid;
    else iv.lo = mid;
  }
  return iv;
}

std::string AlgebraicNumber::describe() const {
  if (is_rational()) return rational_string(where.lo);
  return "root of " + poly.to_string() + " in (" + rational_string(where.lo) + ", " + rational_string(where.hi) + ")";
}

namespace {

void bisect(AlgebraicNumber& a) {
  if (a.is_rational()) return;
  a.where = refine(a.poly, a.where, a.where.width() / 2);
}

// Rational strictly between l < r.
Rational between(AlgebraicNumber& l, AlgebraicNumber& r) {
  while (!(l.where.hi < r.where.lo)) {
    if (l.where.width() >= r.where.width()) bisect(l);
    else bisect(r);
  }
  return (l.where.hi + r.where.lo) / 2;
}

}  // namespace

int compare(const Rational& x, AlgebraicNumber& a) {
  for (;;) {
    if (a.is_rational()) return cmp(x, a.where.lo) < 0 ? -1 : (cmp(x, a.where.lo) > 0 ? 1 : 0);
    if (x <= a.where.lo) return -1;
    if (x >= a.where.hi) return 1;
    if (sgn(a.poly(x)) == 0) return 0;
    bisect(a);
  }
}

// ---------------------------------------------------------------------------

namespace {

// Coefficient polynomials in x of P viewed in y: result[k] multiplies y^k.
std::vector<UPoly> y_coefficients(const Polynomial& p) {
  std::vector<std::vector<Rational>> c(p.degree_in(1) + 1, std::vector<Rational>(p.degree_in(0) + 1));
  for (const auto& [m, v] : p.terms()) c[m[1]][m[0]] = v.re();
  std::vector<UPoly> out;
  for (auto& row : c) out.emplace_back(std::move(row));
  return out;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences
  std::vector<Rational> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UPoly acc = UPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) acc = acc * UPoly::x_minus(xs[i]) + UPoly::constant(dd[i]);
  return acc;
}

// Resultant of P and dP/dy at x = t with formal degrees m and m - 1.
Rational sylvester_at(const std::vector<UPoly>& cy, const Rational& t) {
  const std::size_t m = cy.size() - 1;
  std::vector<Rational> f(m + 1), g(m);
  for (std::size_t k = 0; k <= m; ++k) f[k] = cy[k](t);
  for (std::size_t k = 0; k < m; ++k) g[k] = f[k + 1] * static_cast<long>(k + 1);
  const std::size_t size = 2 * m - 1;
  ScalarMatrix s(size, std::vector<ExactScalar>(size));
  // rows hold coefficients from the highest degree down
  for (std::size_t r = 0; r + 1 < m; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = ExactScalar(f[m - k]);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) s[m - 1 + r][r + k] = ExactScalar(g[m - 1 - k]);
  return determinant(std::move(s)).re();
}

/// Arithmetic in Q[x]/(m) at the root xi of m isolated by `where`; m shrinks
/// to a factor whenever a zero divisor shows up.
class RootField {
 public:
  explicit RootField(AlgebraicNumber a) : a_(std::move(a)) { a_.poly = a_.poly.monic(); }

  UPoly reduce(const UPoly& q) const { return divmod(q, a_.poly).second; }

  bool is_zero(const UPoly& q) {
    const UPoly r = reduce(q);
    if (r.is_zero()) return true;
    const UPoly g = gcd(a_.poly, r);
    if (g.degree() == 0) return false;
    if (has_root(g)) {
      a_.poly = g;
      return true;
    }
    a_.poly = divmod(a_.poly, g).first.monic();
    return false;
  }

  // Sign of q(xi); q(xi) must be nonzero.
  int sign(const UPoly& q) {
    const UPoly r = reduce(q);
    if (r.degree() <= 0) return r.is_zero() ? 0 : sgn(r.lead());
    const auto st = sturm_sequence(squarefree_part(r));
    for (;;) {
      if (a_.is_rational()) return sgn(r(a_.where.lo));
      if (count_roots(st, a_.where.lo, a_.where.hi) == 0 && sgn(r(a_.where.hi)) != 0) return sgn(r(a_.where.hi));
      bisect(a_);
    }
  }

  // Inverse of q(xi); q(xi) must be nonzero and is_zero(q) already asked.
  UPoly inverse(const UPoly& q) const {
    UPoly r0 = a_.poly, r1 = reduce(q);
    UPoly s0, s1 = UPoly::constant(Rational(1));
    while (r1.degree() > 0) {
      auto [quo, rem] = divmod(r0, r1);
      UPoly s2 = s0 - quo * s1;
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.is_zero()) fail(ErrorCode::internal, "inverting a zero divisor");
    return reduce(Rational(1) / r1.lead() * s1);
  }

  UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }

 private:
  bool has_root(const UPoly& g) {
    if (a_.is_rational()) return sgn(g(a_.where.lo)) == 0;
    return count_roots(sturm_sequence(g), a_.where.lo, a_.where.hi) > 0;
  }

  AlgebraicNumber a_;
};

using KPoly = std::vector<UPoly>;  // coefficients in Q[x]/(m), lowest degree first

void strip(KPoly& f, RootField& k) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

// Number of distinct real roots of P(xi, y).
std::size_t count_at(const std::vector<UPoly>& cy, const AlgebraicNumber& xi) {
  RootField k(xi);
  KPoly f;
  for (const auto& c : cy) f.push_back(k.reduce(c));
  strip(f, k);
  if (f.empty()) fail(ErrorCode::degenerate_fiber, "the fiber over " + xi.describe() + " vanishes identically");
  std::vector<KPoly> seq{f};
  KPoly d;
  for (std::size_t j = 1; j < f.size(); ++j) d.push_back(k.reduce(Rational(static_cast<long>(j)) * f[j]));
  strip(d, k);
  while (!d.empty()) {
    seq.push_back(d);
    // remainder of the previous entry by d over the field
    KPoly r = seq[seq.size() - 2];
    const UPoly inv = k.inverse(d.back());
    while (r.size() >= d.size()) {
      const UPoly f0 = k.mul(r.back(), inv);
      const std::size_t shift = r.size() - d.size();
      for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] = k.reduce(r[shift + j] - f0 * d[j]);
      r.pop_back();
      strip(r, k);
    }
    for (auto& c : r) c = Rational(-1) * c;
    d = std::move(r);
  }
  std::vector<int> plus, minus;
  for (const auto& p : seq) {
    const int s = k.sign(p.back());
    plus.push_back(s);
    minus.push_back((p.size() - 1) % 2 == 0 ? s : -s);
  }
  const std::size_t vm = variations(minus), vp = variations(plus);
  return vm > vp ? vm - vp : 0;
}

}  // namespace

UPoly fiber(const Polynomial& p, const Rational& x0) {
  if (p.vars() != 2) fail(ErrorCode::arity_mismatch, "branch polynomials have two variables (x, y)");
  std::vector<Rational> c(p.degree_in(1) + 1);
  for (const auto& [m, v] : p.terms()) {
    Rational t = v.re();
    for (unsigned e = 0; e < m[0]; ++e) t *= x0;
    c[m[1]] += t;
  }
  return UPoly(std::move(c));
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& x0) {
  const UPoly f = fiber(p, x0);
  if (f.is_zero())
    fail(ErrorCode::degenerate_fiber, "P(" + rational_string(x0) + ", y) vanishes identically");
  return isolate_real_roots(f);
}

UPoly critical_polynomial(const Polynomial& p) {
  const auto cy = y_coefficients(p);
  const std::size_t m = cy.size() - 1;
  if (m == 0) fail(ErrorCode::invalid_input, "P must have positive degree in y");
  const std::size_t dx = p.degree_in(0);
  const std::size_t bound = (2 * m - 1) * dx;
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= bound; ++t) {
    xs.emplace_back(static_cast<long>(t));
    ys.push_back(sylvester_at(cy, xs.back()));
  }
  return cy[m] * interpolate(xs, ys);
}

void validate_problem(const BranchProblem& problem) {
  const Polynomial& p = problem.p;
  if (p.vars() != 2) fail(ErrorCode::arity_mismatch, "branch polynomials have two variables (x, y)");
  if (p.is_zero()) fail(ErrorCode::invalid_input, "P is zero");
  if (!p.is_real()) fail(ErrorCode::invalid_input, "P must have rational coefficients");
  if (p.degree_in(1) == 0) fail(ErrorCode::invalid_input, "P must have positive degree in y");
  if (problem.b < problem.a) fail(ErrorCode::invalid_input, "empty domain");
  UPoly content;
  for (const auto& c : y_coefficients(p)) content = gcd(content, c);
  if (content.degree() > 0)
    fail(ErrorCode::invalid_input, "P has the factor " + content.to_string() + " free of y; gcd(P, dP/dy) is not constant");
  if (critical_polynomial(p).is_zero())
    fail(ErrorCode::invalid_input, "P is not squarefree in y; pass P / gcd(P, dP/dy)");
}

std::vector<Cell1D> cell_partition(const BranchProblem& problem) {
  validate_problem(problem);
  const auto cy = y_coefficients(problem.p);
  const UPoly crit = squarefree_part(critical_polynomial(problem.p));
  std::vector<AlgebraicNumber> points{AlgebraicNumber::rational(problem.a)};
  if (problem.a < problem.b) {
    for (const auto& iv : isolate_real_roots(crit)) {
      AlgebraicNumber xi{crit, iv};
      if (compare(problem.a, xi) < 0 && compare(problem.b, xi) > 0) points.push_back(std::move(xi));
    }
    points.push_back(AlgebraicNumber::rational(problem.b));
  }
  std::vector<Cell1D> cells;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) {
      Cell1D c;
      c.kind = Cell1D::open_interval;
      c.left = points[i - 1];
      c.right = points[i];
      c.sample = between(c.left, c.right);
      c.count = isolate_roots(problem.p, c.sample).size();
      cells.push_back(std::move(c));
    }
    Cell1D c;
    c.kind = Cell1D::point;
    c.left = points[i];
    c.count = count_at(cy, points[i]);
    cells.push_back(std::move(c));
  }
  return cells;
}

namespace {

bool in_cell(const Rational& x, Cell1D cell) {
  if (cell.kind == Cell1D::point) return compare(x, cell.left) == 0;
  return compare(x, cell.left) > 0 && compare(x, cell.right) < 0;
}

}  // namespace

BranchHandle identify_branch(const BranchProblem& problem, const std::vector<Cell1D>& cells, const Rational& x0,
                             const Rational& ylo, const Rational& yhi) {
  if (yhi < ylo) fail(ErrorCode::invalid_input, "empty sample enclosure");
  std::optional<std::size_t> where;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].kind == Cell1D::open_interval && in_cell(x0, cells[i])) where = i;
  if (!where) fail(ErrorCode::outside_cell, "x0 = " + rational_string(x0) + " is not interior to an interval cell");
  const UPoly f = squarefree_part(fiber(problem.p, x0));
  const std::size_t inside = count_roots_closed(f, ylo, yhi);
  if (inside != 1)
    fail(ErrorCode::ambiguous_sample, "the enclosure [" + rational_string(ylo) + ", " + rational_string(yhi) +
                                          "] meets " + std::to_string(inside) + " branches");
  const Rational B = root_bound(f);
  const std::size_t below = count_roots(sturm_sequence(f), -B, ylo) - (sgn(f(ylo)) == 0 ? 1 : 0);
  return {*where, below + 1};
}

RootInterval evaluate_branch(const BranchProblem& problem, const std::vector<Cell1D>& cells, const BranchHandle& h,
                             const Rational& x, const Rational& width) {
  if (h.cell >= cells.size()) fail(ErrorCode::invalid_input, "branch handle names a missing cell");
  if (sgn(width) <= 0) fail(ErrorCode::invalid_input, "width must be positive");
  const Cell1D& cell = cells[h.cell];
  if (!in_cell(x, cell)) fail(ErrorCode::outside_cell, "x = " + rational_string(x) + " lies outside the handle's cell");
  if (h.branch < 1 || h.branch > cell.count)
    fail(ErrorCode::invalid_input, "branch index " + std::to_string(h.branch) + " out of range 1.." + std::to_string(cell.count));
  const auto roots = isolate_roots(problem.p, x);
  if (roots.size() != cell.count) fail(ErrorCode::internal, "root count is not constant on the cell");
  return refine(squarefree_part(fiber(problem.p, x)), roots[h.branch - 1], width);
}

}  // namespace aatkit
