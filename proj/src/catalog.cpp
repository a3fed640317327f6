#include "aatkit/catalog.hpp"

#include "aatkit/error.hpp"
#include "mp_real.hpp"

#include <cmath>
#include <random>

namespace aatkit {

namespace {

#include "weierstrass_formulas.inc"

const std::vector<std::string>& addition_names() {
  static const std::vector<std::string> names{"x0", "x1", "y0", "y1"};
  return names;
}
const std::vector<std::string>& negation_names() {
  static const std::vector<std::string> names{"x0", "x1"};
  return names;
}

RationalFunction rf(const char* num, const char* den, const std::vector<std::string>& names) {
  return {parse_polynomial(num, names), parse_polynomial(den, names)};
}

OdeSpec custom_constant_motion(long y0, long dy0) {
  // y'' = 0
  OdeSpec s;
  s.kind = OdeKind::custom;
  s.y0 = y0;
  s.dy0 = dy0;
  return s;
}

OdeSpec simple(OdeKind k) {
  OdeSpec s;
  s.kind = k;
  return s;
}

OdeSpec wp_spec(bool derivative) { return OdeSpec::weierstrass(0, -4, 0, 2, derivative); }

// Coordinate list -> PeriodVector; each entry is (component, slot, scalar).
PeriodVector vec(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, ExactScalar>> parts) {
  PeriodVector v(n);
  for (const auto& [i, slot, c] : parts) v.add(i, slot, c);
  return v;
}

constexpr std::size_t kPi = 1, kOmegaR = 2, kOmegaI = 3;

const ExactScalar kI = ExactScalar::i();
const ExactScalar kHalf = ExactScalar(Rational(1, 2));

std::vector<GroupDescriptor> make_catalog() {
  const SymbolTable& t = catalog_symbols();
  std::vector<GroupDescriptor> out;

  {
    GroupDescriptor d;
    d.name = "identity";
    d.odes = {custom_constant_motion(0, 1)};
    d.periods = PeriodGroup(t, 1, {});
    Companion c;
    c.psi = {custom_constant_motion(1, 0), d.odes[0]};
    c.addition = {{1, rf("x1 + y1", "1", addition_names())}};
    c.negation = {{1, rf("-x1", "1", negation_names())}};
    d.companion = std::move(c);
    d.degree_bound = 2;
    d.order = 8;
    out.push_back(std::move(d));
  }
  {
    GroupDescriptor d;
    d.name = "exp";
    d.odes = {simple(OdeKind::exp)};
    d.periods = PeriodGroup(t, 1, {vec(1, {{0, kPi, ExactScalar(0) + ExactScalar(2) * kI}})});
    Companion c;
    c.psi = {custom_constant_motion(1, 0), d.odes[0]};
    c.addition = {{1, rf("x1*y1", "1", addition_names())}};
    c.negation = {{1, rf("1", "x1", negation_names())}};
    d.companion = std::move(c);
    d.degree_bound = 2;
    d.order = 10;
    out.push_back(std::move(d));
  }
  {
    GroupDescriptor d;
    d.name = "sin";
    d.odes = {simple(OdeKind::sin)};
    d.periods = PeriodGroup(t, 1, {vec(1, {{0, kPi, 2}})});
    Companion c;
    c.psi = {simple(OdeKind::cos), d.odes[0]};
    c.addition = {{0, rf("x0*y0 - x1*y1", "1", addition_names())}, {1, rf("x1*y0 + x0*y1", "1", addition_names())}};
    c.negation = {{0, rf("x0", "1", negation_names())}, {1, rf("-x1", "1", negation_names())}};
    c.relation = parse_polynomial("x0^2 + x1^2 - 1", negation_names());
    d.companion = std::move(c);
    d.degree_bound = 6;
    d.order = 16;
    out.push_back(std::move(d));
  }
  {
    GroupDescriptor d;
    d.name = "weierstrass_g2_0_g3_m4";
    d.odes = {wp_spec(false)};
    d.periods = PeriodGroup(t, 1, {vec(1, {{0, kOmegaR, 1}}), vec(1, {{0, kOmegaR, kHalf}, {0, kOmegaI, kI}})});
    Companion c;
    c.psi = {wp_spec(true), d.odes[0]};
    c.addition = {{0, rf(k_dwp_add_num, k_dwp_add_den, addition_names())},
                  {1, rf(k_wp_add_num, k_wp_add_den, addition_names())}};
    c.negation = {{0, rf(k_dwp_neg_num, k_dwp_neg_den, negation_names())},
                  {1, rf(k_wp_neg_num, k_wp_neg_den, negation_names())}};
    c.relation = parse_polynomial("x0^2 - 4*x1^3 - 4", negation_names());
    d.companion = std::move(c);
    d.degree_bound = 12;
    d.order = 56;
    out.push_back(std::move(d));
  }
  {
    GroupDescriptor d;
    d.name = "exp_x_sin";
    d.dimension = 2;
    d.odes = {simple(OdeKind::exp), simple(OdeKind::sin)};
    d.periods = PeriodGroup(t, 2, {vec(2, {{0, kPi, ExactScalar(0) + ExactScalar(2) * kI}}), vec(2, {{1, kPi, 2}})});
    d.degree_bound = 6;
    d.order = 16;
    out.push_back(std::move(d));
  }
  {
    GroupDescriptor d;
    d.name = "sin_x_weierstrass";
    d.dimension = 2;
    d.odes = {simple(OdeKind::sin), wp_spec(false)};
    d.periods = PeriodGroup(t, 2,
                            {vec(2, {{0, kPi, 2}}), vec(2, {{1, kOmegaR, 1}}),
                             vec(2, {{1, kOmegaR, kHalf}, {1, kOmegaI, kI}})});
    d.degree_bound = 12;
    d.order = 56;
    out.push_back(std::move(d));
  }
  for (const auto& d : out)
    if (!d.periods.is_discrete()) fail(ErrorCode::internal, "catalog entry " + d.name + " has a non-discrete group");
  return out;
}

}  // namespace

GermMap GroupDescriptor::germ(unsigned order) const {
  std::vector<TruncatedSeries> factors;
  std::string prov;
  for (const auto& o : odes) {
    factors.push_back(generate_series(o, order));
    if (!prov.empty()) prov += " x ";
    prov += o.describe();
  }
  return product_germ(factors, field, prov);
}

std::optional<RationalAdditionSystem> GroupDescriptor::system(unsigned order) const {
  if (!companion) return std::nullopt;
  RationalAdditionSystem s;
  for (const auto& o : companion->psi) s.psi.push_back(generate_series(o, order));
  s.addition = companion->addition;
  s.negation = companion->negation;
  s.relation = companion->relation;
  return s;
}

const SymbolTable& catalog_symbols() {
  static const SymbolTable table({
      {"pi", "3.1415926535897932384626433832795028841971693993751058209749445923078164062862090"},
      // real period of y^2 = 4x^3 + 4 and the imaginary part of the second
      // generator; the lattice is hexagonal, omega_i = omega_r * sqrt(3) / 2
      {"omega_r", "4.2065463159763627835250572371508824063890666162719582885459819612288542979454099"},
      {"omega_i", "3.6429759718313724177299125346713968728325522673123639116249441282081085310426538"},
  });
  return table;
}

const std::vector<GroupDescriptor>& builtin_catalog() {
  static const std::vector<GroupDescriptor> catalog = make_catalog();
  return catalog;
}

const GroupDescriptor& catalog_entry(const std::string& name) {
  for (const auto& d : builtin_catalog())
    if (d.name == name) return d;
  fail(ErrorCode::not_found, "no catalog entry named '" + name + "'");
}

RankReport rank_report(const std::vector<const GroupDescriptor*>& descriptors) {
  RankReport r;
  for (const auto* d : descriptors) r.rows.push_back({d->name, d->periods.zrank()});
  for (std::size_t i = 0; i < descriptors.size(); ++i)
    for (std::size_t j = i + 1; j < descriptors.size(); ++j)
      r.pairs.push_back({i, j, compare_rank_invariant(descriptors[i]->periods, descriptors[j]->periods)});
  return r;
}

// ---------------------------------------------------------------------------
// Numeric period check

namespace {

using mp::Complex;
using mp::Real;

mpfr_prec_t bits_for(unsigned digits) { return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16; }

struct NumericOde {
  std::vector<Complex> lead;  // empty means 1
  std::vector<std::pair<std::pair<unsigned, unsigned>, Complex>> rhs;
  bool derivative = false;  // report y' instead of y
};

struct State {
  Complex y;
  Complex dy;
};

class Integrator {
 public:
  Integrator(NumericOde ode, mpfr_prec_t prec, unsigned terms) : ode_(std::move(ode)), prec_(prec), K_(terms) {
    for (const auto& [e, c] : ode_.rhs) {
      max_y_ = std::max(max_y_, e.first);
      max_dy_ = std::max(max_dy_, e.second);
    }
    max_y_ = std::max<unsigned>(max_y_, ode_.lead.empty() ? 0 : static_cast<unsigned>(ode_.lead.size() - 1));
  }

  // Taylor coefficients of the solution through s, and the radius estimate.
  std::vector<Complex> coefficients(const State& s) const {
    std::vector<Complex> c(K_ + 1, Complex(prec_));
    c[0] = s.y;
    c[1] = s.dy;
    const Complex zero(prec_);
    Complex one(prec_);
    one.re = Real(prec_, 1);
    // pw[k][n] = coefficient n of y^k, dp[l][n] of (y')^l
    std::vector<std::vector<Complex>> pw(max_y_ + 1), dp(max_dy_ + 1);
    std::vector<Complex> w;  // coefficients of y''
    std::vector<Complex> L;  // coefficients of lead(y)
    for (unsigned n = 0; n + 2 <= K_; ++n) {
      pw[0].push_back(n == 0 ? one : zero);
      dp[0].push_back(n == 0 ? one : zero);
      if (max_y_ >= 1) pw[1].push_back(c[n]);
      for (unsigned k = 2; k <= max_y_; ++k) pw[k].push_back(convolve(c, pw[k - 1], n));
      if (max_dy_ >= 1) dp[1].push_back(c[n + 1] * Real(prec_, static_cast<long>(n + 1)));
      for (unsigned l = 2; l <= max_dy_; ++l) dp[l].push_back(convolve(dp[1], dp[l - 1], n));
      Complex rhs(prec_);
      for (const auto& [e, coef] : ode_.rhs) rhs += coef * convolve(pw[e.first], dp[e.second], n);
      if (ode_.lead.empty()) {
        L.push_back(n == 0 ? one : zero);
      } else {
        Complex l(prec_);
        for (std::size_t p = 0; p < ode_.lead.size(); ++p) l += ode_.lead[p] * pw[p][n];
        L.push_back(std::move(l));
      }
      if (n > 0 && !ode_.lead.empty()) {
        std::vector<Complex> tail(L.begin() + 1, L.end());
        rhs -= convolve(tail, w, n - 1);
      }
      w.push_back(rhs / L[0]);
      c[n + 2] = w.back() * (Real(prec_, 1) / Real(prec_, static_cast<long>((n + 1) * (n + 2))));
    }
    return c;
  }

  // Radius estimate from the tail of the coefficients; +inf when they vanish.
  static double radius(const std::vector<Complex>& c) {
    double r = INFINITY;
    for (std::size_t k = c.size() / 2; k < c.size(); ++k) {
      const Real a = c[k].abs();
      if (a.is_zero()) continue;
      long ex = 0;
      const double m = mpfr_get_d_2exp(&ex, a.get(), MPFR_RNDN);
      const double lg = std::log(m) + static_cast<double>(ex) * std::log(2.0);
      r = std::min(r, std::exp(-lg / static_cast<double>(k)));
    }
    return r;
  }

  // Advances along the straight segment a -> b with steps radius/divisor;
  // nullopt when the path comes too close to a singularity.
  std::optional<State> segment(State s, const Complex& a, const Complex& b, double divisor) const {
    const Complex delta = b - a;
    const Real len = delta.abs();
    if (len.is_zero()) return s;
    const double len_d = mpfr_get_d(len.get(), MPFR_RNDN);
    Real t(prec_, 0);
    const Real one(prec_, 1);
    for (unsigned step = 0; step < kMaxSteps; ++step) {
      if (!(t < one)) return s;
      const auto c = coefficients(s);
      const double rho = radius(c);
      if (rho < kMinRadius) return std::nullopt;
      Real dt(prec_);
      mpfr_set_d(dt.get(), std::min(kMaxStep, rho / divisor) / len_d, MPFR_RNDN);
      const Real rest = one - t;
      if (rest < dt) dt = rest;
      const Complex h = delta * dt;
      // Horner for y and y'
      Complex y = c[K_], dy = c[K_] * Real(prec_, static_cast<long>(K_));
      for (unsigned k = K_; k-- > 0;) {
        y = y * h + c[k];
        if (k >= 1) dy = dy * h + c[k] * Real(prec_, static_cast<long>(k));
      }
      s = {std::move(y), std::move(dy)};
      if (!s.y.is_finite() || !s.dy.is_finite()) return std::nullopt;
      t += dt;
    }
    return std::nullopt;
  }

  // Segment with perpendicular detours around trouble.
  std::optional<State> path(const State& s, const Complex& a, const Complex& b, double divisor, int depth = 0) const {
    if (auto r = segment(s, a, b, divisor)) return r;
    if (depth >= 3) return std::nullopt;
    const Complex mid = (a + b) * Real(prec_, Rational(1, 2));
    const Complex delta = b - a;
    const Complex perp{-delta.im, delta.re};
    for (const Rational& off : {Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1)}) {
      const Complex m = mid + perp * Real(prec_, off);
      auto first = path(s, a, m, divisor, depth + 1);
      if (!first) continue;
      if (auto r = path(*first, m, b, divisor, depth + 1)) return r;
    }
    return std::nullopt;
  }

  const Complex& value(const State& s) const { return ode_.derivative ? s.dy : s.y; }

 private:
  static constexpr unsigned kMaxSteps = 4000;
  static constexpr double kMinRadius = 0.05;
  static constexpr double kMaxStep = 1.0;

  Complex convolve(const std::vector<Complex>& a, const std::vector<Complex>& b, unsigned n) const {
    Complex acc(prec_);
    Real t(prec_);
    for (unsigned j = 0; j <= n; ++j) {
      const Complex& x = a[j];
      const Complex& y = b[n - j];
      if (x.re.is_zero() && x.im.is_zero()) continue;
      mpfr_mul(t.get(), x.re.get(), y.re.get(), MPFR_RNDN);
      mpfr_add(acc.re.get(), acc.re.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x.im.get(), y.im.get(), MPFR_RNDN);
      mpfr_sub(acc.re.get(), acc.re.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x.re.get(), y.im.get(), MPFR_RNDN);
      mpfr_add(acc.im.get(), acc.im.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x.im.get(), y.re.get(), MPFR_RNDN);
      mpfr_add(acc.im.get(), acc.im.get(), t.get(), MPFR_RNDN);
    }
    return acc;
  }

  NumericOde ode_;
  mpfr_prec_t prec_;
  unsigned K_;
  unsigned max_y_ = 0;
  unsigned max_dy_ = 0;
};

// One component f_i, evaluated either in closed form or by integration.
class ComponentEvaluator {
 public:
  ComponentEvaluator(const OdeSpec& spec, mpfr_prec_t prec, unsigned working_digits) : spec_(spec), prec_(prec) {
    validate_ode_spec(spec);
    if (spec.kind == OdeKind::weierstrass_p || spec.kind == OdeKind::weierstrass_p_prime ||
        spec.kind == OdeKind::custom) {
      NumericOde ode;
      State init{Complex(prec), Complex(prec)};
      if (spec.kind == OdeKind::custom) {
        for (const auto& c : spec.lead) ode.lead.emplace_back(prec, c);
        for (const auto& [e, c] : spec.rhs.terms) ode.rhs.push_back({e, Complex(prec, c)});
        init = {Complex(prec, spec.y0), Complex(prec, spec.dy0)};
      } else {
        ode.rhs.push_back({{2, 0}, Complex(prec, ExactScalar(6))});
        ode.rhs.push_back({{0, 0}, Complex(prec, -spec.g2 / ExactScalar(2))});
        ode.derivative = spec.kind == OdeKind::weierstrass_p_prime;
        init = {Complex(prec, spec.p0), Complex(prec, spec.p1)};
      }
      const unsigned terms = static_cast<unsigned>(std::ceil(working_digits * std::log(10.0) / std::log(3.0))) + 10;
      integrator_.emplace(std::move(ode), prec, terms);
      init_.emplace(std::move(init));
    }
  }

  // f(u), f(u + lambda_j) for each shift, with a step-doubling error bound.
  struct Values {
    Complex at_u;
    std::vector<Complex> shifted;
    Real error;
  };

  Values evaluate(const Complex& u, const std::vector<Complex>& shifts) const {
    if (!integrator_) {
      Values v{closed_form(u), {}, Real(prec_, 0)};
      for (const auto& l : shifts) v.shifted.push_back(closed_form(u + l));
      for (const auto& x : v.shifted)
        if (!x.is_finite()) fail(ErrorCode::evaluation_divergence, "evaluation diverged at a sample");
      return v;
    }
    const Complex zero(prec_);
    Values out{Complex(prec_), {}, Real(prec_, 0)};
    std::optional<State> coarse_u, fine_u;
    for (double divisor : {3.0, 6.0}) {
      auto su = integrator_->path(*init_, zero, u, divisor);
      if (!su) fail(ErrorCode::evaluation_divergence, "integration to the sample point diverged");
      (divisor == 3.0 ? coarse_u : fine_u) = std::move(su);
    }
    out.at_u = integrator_->value(*fine_u);
    out.error = (integrator_->value(*coarse_u) - out.at_u).abs();
    for (const auto& l : shifts) {
      const Complex target = u + l;
      auto c = integrator_->path(*coarse_u, u, target, 3.0);
      auto f = integrator_->path(*fine_u, u, target, 6.0);
      if (!c || !f) fail(ErrorCode::evaluation_divergence, "integration along a period diverged");
      Complex fv = integrator_->value(*f);
      out.error = mp::max(out.error, (integrator_->value(*c) - fv).abs());
      out.shifted.push_back(std::move(fv));
    }
    return out;
  }

  // Coefficients explode near a pole; used to keep samples away from them.
  bool near_singularity(const Complex& u) const {
    if (!integrator_) {
      if (spec_.kind == OdeKind::tan) return cos(u).abs() < Real(prec_, Rational(1, 10));
      return false;
    }
    const auto s = integrator_->path(*init_, Complex(prec_), u, 3.0);
    if (!s) return true;
    return Integrator::radius(integrator_->coefficients(*s)) < 0.25;
  }

 private:
  Complex closed_form(const Complex& u) const {
    switch (spec_.kind) {
      case OdeKind::exp: return exp(u);
      case OdeKind::sin: return sin(u);
      case OdeKind::cos: return cos(u);
      case OdeKind::tan: return sin(u) / cos(u);
      default: break;
    }
    fail(ErrorCode::internal, "no closed form for this ODE kind");
  }

  OdeSpec spec_;
  mpfr_prec_t prec_;
  std::optional<Integrator> integrator_;
  std::optional<State> init_;
};

std::size_t count_digits(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c >= '0' && c <= '9') ++n;
  return n;
}

}  // namespace

PeriodCheckReport numeric_period_check(const GroupDescriptor& d, unsigned digits, unsigned samples,
                                       const std::optional<PeriodGroup>& periods) {
  if (digits < 2) fail(ErrorCode::invalid_input, "precision must be at least 2 digits");
  if (samples == 0) fail(ErrorCode::invalid_input, "sample count must be positive");
  const PeriodGroup& g = periods ? *periods : d.periods;
  if (g.dimension() != d.dimension || d.odes.size() != d.dimension)
    fail(ErrorCode::variable_mismatch, "period group dimension differs from the descriptor's");

  const unsigned wd = digits + 20;
  const mpfr_prec_t prec = bits_for(wd);

  PeriodCheckReport rep;
  rep.digits = digits;
  rep.samples = samples;
  rep.assumption = g.table().assumption();
  rep.tolerance = "1e-" + std::to_string(digits / 2);
  const Real tol = mp::pow10(prec, -static_cast<long>(digits / 2));

  // generators as complex vectors
  std::vector<Real> sym;
  for (const auto& s : g.table().symbols()) {
    if (!s.decimal) {
      sym.emplace_back(prec);
      continue;
    }
    sym.emplace_back(prec, *s.decimal);
    if (!sym.back().is_finite()) fail(ErrorCode::parse_error, "bad decimal for symbol " + s.name);
  }
  std::vector<std::vector<Complex>> lambdas;  // [generator][component]
  for (const auto& v : g.generators()) {
    std::vector<Complex> lam;
    for (std::size_t i = 0; i < d.dimension; ++i) {
      Complex z(prec);
      for (const auto& [slot, c] : v.coords()[i]) {
        Real base(prec, 1);
        if (slot > 0) {
          const auto& s = g.table().symbols()[slot - 1];
          if (!s.decimal) fail(ErrorCode::missing_approximation, "symbol " + s.name + " has no decimal approximation");
          if (count_digits(*s.decimal) < digits)
            fail(ErrorCode::missing_approximation, "approximation of " + s.name + " is shorter than " +
                                                       std::to_string(digits) + " digits");
          base = sym[slot - 1];
        }
        z += Complex(prec, c) * base;
      }
      lam.push_back(std::move(z));
    }
    lambdas.push_back(std::move(lam));
  }

  Real worst(prec, 0);
  std::vector<Real> per(lambdas.size(), Real(prec, 0));
  if (!lambdas.empty()) {
    std::vector<ComponentEvaluator> evals;
    for (const auto& o : d.odes) evals.emplace_back(o, prec, wd);
    std::mt19937_64 rng(0x5eed5eedULL);
    auto draw = [&] {
      const long k = static_cast<long>(rng() % 2001) - 1000;
      return Real(prec, Rational(k, 1000));
    };
    const Real slack = mp::pow10(prec, -static_cast<long>(wd) + 10);
    for (unsigned s = 0; s < samples; ++s) {
      std::vector<Complex> u;
      for (std::size_t i = 0; i < d.dimension; ++i) {
        unsigned tries = 0;
        for (;;) {
          Real re = draw();
          Real im = draw();
          Complex z(std::move(re), std::move(im));
          if (!evals[i].near_singularity(z)) {
            u.push_back(std::move(z));
            break;
          }
          if (++tries > 64) fail(ErrorCode::evaluation_divergence, "no sample point away from the singularities");
        }
      }
      std::vector<Real> res(lambdas.size(), Real(prec, 0));
      for (std::size_t i = 0; i < d.dimension; ++i) {
        std::vector<Complex> shifts;
        for (const auto& lam : lambdas) shifts.push_back(lam[i]);
        const auto v = evals[i].evaluate(u[i], shifts);
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
          Real r = (v.shifted[j] - v.at_u).abs() + Real(prec, 2) * v.error + slack;
          res[j] = mp::max(res[j], r);
        }
      }
      for (std::size_t j = 0; j < lambdas.size(); ++j) {
        per[j] = mp::max(per[j], res[j]);
        worst = mp::max(worst, res[j]);
      }
    }
  }
  for (std::size_t j = 0; j < per.size(); ++j) rep.per_generator.push_back({j, per[j].sci()});
  rep.max_residual = worst.is_zero() ? "0" : worst.sci();
  rep.verdict = worst < tol ? Verdict::pass : Verdict::fail;
  return rep;
}

NumericValue numeric_value(const OdeSpec& spec, const ExactScalar& z, unsigned digits) {
  if (digits < 2) fail(ErrorCode::invalid_input, "precision must be at least 2 digits");
  const unsigned wd = digits + 20;
  const mpfr_prec_t prec = bits_for(wd);
  const ComponentEvaluator e(spec, prec, wd);
  const auto v = e.evaluate(Complex(prec, z), {});
  return {v.at_u.re.sci(static_cast<int>(digits)), v.at_u.im.sci(static_cast<int>(digits))};
}

}  // namespace aatkit
