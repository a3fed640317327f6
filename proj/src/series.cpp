#include "aatkit/series.hpp"

#include "aatkit/error.hpp"

#include <algorithm>
#include <map>

namespace aatkit {

namespace {

void require_same_vars(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars() != b.vars())
    fail(ErrorCode::variable_mismatch, "series have " + std::to_string(a.vars()) + " and " +
                                           std::to_string(b.vars()) + " variables");
}

// Dense accumulator over all monomials below a truncation order.
class DenseAccumulator {
 public:
  DenseAccumulator(std::size_t vars, unsigned order)
      : ranker_(vars, order), slots_(ranker_.count()), index_(ranker_.count()) {}

  ExactScalar& at(const MultiIndex& m) {
    const std::size_t r = ranker_.rank(m);
    if (index_[r].size() == 0) index_[r] = m;
    return slots_[r];
  }

  TruncatedSeries finish() {
    std::vector<SeriesTerm> terms;
    for (std::size_t r = 0; r < slots_.size(); ++r)
      if (!slots_[r].is_zero()) terms.push_back({std::move(index_[r]), std::move(slots_[r])});
    return TruncatedSeries::from_terms(ranker_.vars(), ranker_.order(), std::move(terms));
  }

 private:
  MonomialRanker ranker_;
  std::vector<ExactScalar> slots_;
  std::vector<MultiIndex> index_;
};

Rational binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace

TruncatedSeries TruncatedSeries::from_terms(std::size_t vars, unsigned order, std::vector<SeriesTerm> terms) {
  for (const auto& t : terms)
    if (t.index.size() != vars)
      fail(ErrorCode::variable_mismatch, "term index " + t.index.to_string() + " has wrong arity");
  std::erase_if(terms, [&](const SeriesTerm& t) { return t.coeff.is_zero() || t.index.total_degree() >= order; });
  std::stable_sort(terms.begin(), terms.end(),
                   [](const SeriesTerm& a, const SeriesTerm& b) { return graded_before(a.index, b.index); });
  std::vector<SeriesTerm> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().index == t.index)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const SeriesTerm& t) { return t.coeff.is_zero(); });
  TruncatedSeries s(vars, order);
  s.terms_ = std::move(merged);
  return s;
}

TruncatedSeries TruncatedSeries::constant(std::size_t vars, unsigned order, const ExactScalar& c) {
  return from_terms(vars, order, {{MultiIndex(vars), c}});
}

TruncatedSeries TruncatedSeries::variable(std::size_t vars, unsigned order, std::size_t which) {
  return from_terms(vars, order, {{MultiIndex::unit(vars, which), ExactScalar(1)}});
}

TruncatedSeries TruncatedSeries::univariate(unsigned order, std::span<const ExactScalar> coeffs) {
  std::vector<SeriesTerm> terms;
  for (std::size_t i = 0; i < coeffs.size() && i < order; ++i)
    if (!coeffs[i].is_zero()) terms.push_back({MultiIndex{static_cast<unsigned>(i)}, coeffs[i]});
  TruncatedSeries s(1, order);
  s.terms_ = std::move(terms);
  return s;
}

ExactScalar TruncatedSeries::coeff(const MultiIndex& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const SeriesTerm& t, const MultiIndex& k) { return graded_before(t.index, k); });
  if (it != terms_.end() && it->index == m) return it->coeff;
  return ExactScalar(0);
}

ExactScalar TruncatedSeries::constant_term() const {
  if (!terms_.empty() && terms_.front().index.total_degree() == 0) return terms_.front().coeff;
  return ExactScalar(0);
}

std::vector<ExactScalar> TruncatedSeries::dense_univariate() const {
  if (vars_ != 1) fail(ErrorCode::variable_mismatch, "dense_univariate on a multivariate series");
  std::vector<ExactScalar> out(order_);
  for (const auto& t : terms_) out[t.index[0]] = t.coeff;
  return out;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  TruncatedSeries s(vars_, std::min(order, order_));
  for (const auto& t : terms_) {
    if (t.index.total_degree() >= s.order_) break;
    s.terms_.push_back(t);
  }
  return s;
}

TruncatedSeries TruncatedSeries::widened(std::size_t vars) const {
  std::vector<std::size_t> map(vars_);
  for (std::size_t i = 0; i < vars_; ++i) map[i] = i;
  return embedded(vars, map);
}

TruncatedSeries TruncatedSeries::embedded(std::size_t vars, std::span<const std::size_t> map) const {
  if (map.size() != vars_) fail(ErrorCode::variable_mismatch, "embedding map has wrong length");
  std::vector<SeriesTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    MultiIndex m(vars);
    for (std::size_t j = 0; j < vars_; ++j) m[map[j]] += t.index[j];
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(vars, order_, std::move(terms));
}

std::vector<std::size_t> TruncatedSeries::support() const {
  std::vector<bool> used(vars_, false);
  for (const auto& t : terms_)
    for (std::size_t j = 0; j < vars_; ++j)
      if (t.index[j] != 0) used[j] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < vars_; ++j)
    if (used[j]) out.push_back(j);
  return out;
}

TruncatedSeries TruncatedSeries::restricted(std::span<const std::size_t> keep) const {
  std::vector<int> slot(vars_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= vars_) fail(ErrorCode::variable_mismatch, "restriction names a missing variable");
    slot[keep[i]] = static_cast<int>(i);
  }
  std::vector<SeriesTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    MultiIndex m(keep.size());
    for (std::size_t j = 0; j < vars_; ++j) {
      if (t.index[j] == 0) continue;
      if (slot[j] < 0) fail(ErrorCode::variable_mismatch, "series depends on a dropped variable");
      m[static_cast<std::size_t>(slot[j])] = t.index[j];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(keep.size(), order_, std::move(terms));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

TruncatedSeries operator*(const ExactScalar& c, TruncatedSeries s) { return s *= c; }

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars_ != b.vars_ || a.order_ != b.order_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].index == b.terms_[i].index) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

std::optional<SeriesTerm> TruncatedSeries::first_nonzero() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_vars(a, b);
  std::vector<SeriesTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return TruncatedSeries::from_terms(a.vars(), std::min(a.order(), b.order()), std::move(terms));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, -b); }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_vars(a, b);
  const unsigned order = std::min(a.order(), b.order());
  if (a.is_zero() || b.is_zero() || order == 0) return TruncatedSeries(a.vars(), order);
  DenseAccumulator acc(a.vars(), order);
  MultiIndex sum(a.vars());
  for (const auto& ta : a.terms()) {
    const unsigned da = ta.index.total_degree();
    if (da >= order) break;
    for (const auto& tb : b.terms()) {
      if (da + tb.index.total_degree() >= order) break;
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = ta.index[j] + tb.index[j];
      acc.at(sum).add_product(ta.coeff, tb.coeff);
    }
  }
  return acc.finish();
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned k) {
  TruncatedSeries result = TruncatedSeries::constant(a.vars(), a.order(), ExactScalar(1));
  TruncatedSeries base = a;
  while (k != 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op, unsigned k) {
  switch (op) {
    case SeriesOp::add: return add(a, b);
    case SeriesOp::sub: return sub(a, b);
    case SeriesOp::mul: return mul(a, b);
    case SeriesOp::pow: return pow(a, k);
  }
  fail(ErrorCode::internal, "unknown series op");
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  const ExactScalar c0 = a.constant_term();
  if (c0.is_zero()) fail(ErrorCode::denominator_not_unit, "series has zero constant term");
  // 1/a = (1/c0) * sum_k (-t)^k with t = a/c0 - 1, which has no constant term.
  const ExactScalar inv = ExactScalar(1) / c0;
  TruncatedSeries t = inv * a - TruncatedSeries::constant(a.vars(), a.order(), ExactScalar(1));
  TruncatedSeries neg = -t;
  TruncatedSeries sum = TruncatedSeries::constant(a.vars(), a.order(), ExactScalar(1));
  TruncatedSeries power = sum;
  for (unsigned k = 1; k < a.order(); ++k) {
    power = mul(power, neg);
    if (power.is_zero()) break;
    sum = add(sum, power);
  }
  return inv * sum;
}

TruncatedSeries derivative(const TruncatedSeries& a, std::size_t var) {
  if (var >= a.vars()) fail(ErrorCode::variable_mismatch, "derivative variable out of range");
  std::vector<SeriesTerm> terms;
  for (const auto& t : a.terms()) {
    if (t.index[var] == 0) continue;
    MultiIndex m = t.index;
    m[var] -= 1;
    terms.push_back({std::move(m), t.coeff * ExactScalar(static_cast<long>(t.index[var]))});
  }
  return TruncatedSeries::from_terms(a.vars(), a.order() == 0 ? 0 : a.order() - 1, std::move(terms));
}

TruncatedSeries compose(const TruncatedSeries& s, std::span<const TruncatedSeries> inner) {
  if (inner.size() != s.vars()) fail(ErrorCode::arity_mismatch, "compose: wrong number of inner series");
  if (inner.empty()) return s;
  const std::size_t vars = inner.front().vars();
  unsigned order = s.order();
  for (const auto& in : inner) {
    require_same_vars(in, inner.front());
    if (!in.constant_term().is_zero())
      fail(ErrorCode::invalid_input, "compose: inner series must vanish at the base point");
    order = std::min(order, in.order());
  }
  // monomial(e) = monomial(e - unit(j)) * inner_j, memoized
  std::map<std::vector<unsigned>, TruncatedSeries> memo;
  const auto one = TruncatedSeries::constant(vars, order, ExactScalar(1));
  auto monomial = [&](auto&& self, const MultiIndex& e) -> const TruncatedSeries& {
    std::vector<unsigned> key(e.exponents().begin(), e.exponents().end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t j = 0;
    while (j < e.size() && e[j] == 0) ++j;
    TruncatedSeries value = one;
    if (j < e.size()) {
      MultiIndex prev = e;
      prev[j] -= 1;
      value = mul(self(self, prev), inner[j].truncated(order));
    }
    return memo.emplace(std::move(key), std::move(value)).first->second;
  };
  std::vector<SeriesTerm> terms;
  for (const auto& t : s.terms()) {
    if (t.index.total_degree() >= order) break;
    for (const auto& mt : monomial(monomial, t.index).terms()) terms.push_back({mt.index, t.coeff * mt.coeff});
  }
  return TruncatedSeries::from_terms(vars, order, std::move(terms));
}

TruncatedSeries block_sum_substitute(const TruncatedSeries& s, unsigned order) {
  if (order > s.order())
    fail(ErrorCode::order_exceeded,
         "requested order " + std::to_string(order) + " exceeds series order " + std::to_string(s.order()));
  const std::size_t k = s.vars();
  std::vector<SeriesTerm> terms;
  for (const auto& t : s.terms()) {
    if (t.index.total_degree() >= order) break;
    // multinomial expansion of prod_j (u_j + v_j)^{e_j}
    MultiIndex split(k);
    while (true) {
      Rational c(1);
      MultiIndex m(2 * k);
      for (std::size_t j = 0; j < k; ++j) {
        c *= binomial(t.index[j], split[j]);
        m[j] = split[j];
        m[k + j] = t.index[j] - split[j];
      }
      terms.push_back({std::move(m), t.coeff * ExactScalar(c)});
      std::size_t j = 0;
      while (j < k && split[j] == t.index[j]) split[j++] = 0;
      if (j == k) break;
      ++split[j];
    }
  }
  return TruncatedSeries::from_terms(2 * k, order, std::move(terms));
}

TruncatedSeries negate_argument(const TruncatedSeries& s) {
  std::vector<SeriesTerm> terms = s.terms();
  for (auto& t : terms)
    if (t.index.total_degree() % 2 == 1) t.coeff = -t.coeff;
  return TruncatedSeries::from_terms(s.vars(), s.order(), std::move(terms));
}

// ---------------------------------------------------------------------------

std::string_view ode_kind_name(OdeKind k) noexcept {
  switch (k) {
    case OdeKind::exp: return "EXP";
    case OdeKind::sin: return "SIN";
    case OdeKind::cos: return "COS";
    case OdeKind::tan: return "TAN";
    case OdeKind::weierstrass_p: return "WEIERSTRASS_P";
    case OdeKind::weierstrass_p_prime: return "WEIERSTRASS_P_PRIME";
    case OdeKind::custom: return "CUSTOM";
  }
  return "?";
}

OdeKind parse_ode_kind(std::string_view s) {
  for (OdeKind k : {OdeKind::exp, OdeKind::sin, OdeKind::cos, OdeKind::tan, OdeKind::weierstrass_p,
                    OdeKind::weierstrass_p_prime, OdeKind::custom})
    if (ode_kind_name(k) == s) return k;
  fail(ErrorCode::parse_error, "unknown ODE kind '" + std::string(s) + "'");
}

OdeSpec OdeSpec::weierstrass(ExactScalar g2, ExactScalar g3, ExactScalar p0, ExactScalar p1, bool derivative) {
  OdeSpec s;
  s.kind = derivative ? OdeKind::weierstrass_p_prime : OdeKind::weierstrass_p;
  s.g2 = std::move(g2);
  s.g3 = std::move(g3);
  s.p0 = std::move(p0);
  s.p1 = std::move(p1);
  return s;
}

std::string OdeSpec::describe() const {
  switch (kind) {
    case OdeKind::exp: return "exp at 0";
    case OdeKind::sin: return "sin at 0";
    case OdeKind::cos: return "cos at 0";
    case OdeKind::tan: return "tan at 0";
    case OdeKind::weierstrass_p:
    case OdeKind::weierstrass_p_prime:
      return std::string(kind == OdeKind::weierstrass_p ? "wp" : "wp'") + " with g2=" + g2.to_string() +
             ",g3=" + g3.to_string() + " at point (" + p0.to_string() + "," + p1.to_string() + ")";
    case OdeKind::custom:
      return "custom ODE with y(0)=" + y0.to_string() + ", y'(0)=" + dy0.to_string();
  }
  return "?";
}

void validate_ode_spec(const OdeSpec& spec) {
  if (spec.kind == OdeKind::weierstrass_p || spec.kind == OdeKind::weierstrass_p_prime) {
    const ExactScalar lhs = spec.p1 * spec.p1;
    const ExactScalar rhs = ExactScalar(4) * spec.p0 * spec.p0 * spec.p0 - spec.g2 * spec.p0 - spec.g3;
    if (!(lhs == rhs))
      fail(ErrorCode::curve_equation_violated, "initial point (" + spec.p0.to_string() + ", " +
                                                   spec.p1.to_string() + ") is not on y^2 = 4x^3 - g2 x - g3");
  }
  if (spec.kind == OdeKind::custom) {
    const ExactScalar lead0 = [&] {
      ExactScalar v(0), p(1);
      for (const auto& c : spec.lead) {
        v += c * p;
        p *= spec.y0;
      }
      return spec.lead.empty() ? ExactScalar(1) : v;
    }();
    if (lead0.is_zero())
      fail(ErrorCode::unsupported_ode, "leading coefficient of y'' vanishes at the initial point");
  }
}

namespace {

std::vector<ExactScalar> weierstrass_coeffs(const OdeSpec& spec, unsigned order) {
  // y'' = 6 y^2 - g2/2
  std::vector<ExactScalar> a(std::max(order, 2U));
  a[0] = spec.p0;
  a[1] = spec.p1;
  for (unsigned n = 0; n + 2 < order; ++n) {
    ExactScalar conv(0);
    for (unsigned i = 0; i <= n; ++i) conv.add_product(a[i], a[n - i]);
    ExactScalar rhs = ExactScalar(6) * conv;
    if (n == 0) rhs -= spec.g2 / ExactScalar(2);
    a[n + 2] = rhs / ExactScalar(static_cast<long>((n + 1) * (n + 2)));
  }
  a.resize(order);
  return a;
}

TruncatedSeries evaluate_ode_poly(const OdePolynomial& q, const TruncatedSeries& y, const TruncatedSeries& dy) {
  TruncatedSeries acc(1, y.order());
  for (const auto& [e, c] : q.terms) {
    TruncatedSeries term = mul(pow(y, e.first), pow(dy, e.second));
    acc = add(acc, c * term);
  }
  return acc;
}

std::vector<ExactScalar> custom_coeffs(const OdeSpec& spec, unsigned order) {
  std::vector<ExactScalar> a(std::max(order, 2U));
  a[0] = spec.y0;
  a[1] = spec.dy0;
  std::vector<ExactScalar> w;  // coefficients of y''
  for (unsigned n = 0; n + 2 < order; ++n) {
    // coefficients a_0..a_{n+1} are known; the z^n coefficient of
    // lead(y) y'' = rhs(y, y') determines a_{n+2}.
    const TruncatedSeries y = TruncatedSeries::univariate(n + 1, std::span(a).first(n + 2));
    std::vector<ExactScalar> da(n + 1);
    for (unsigned i = 0; i <= n; ++i) da[i] = a[i + 1] * ExactScalar(static_cast<long>(i + 1));
    const TruncatedSeries dy = TruncatedSeries::univariate(n + 1, da);
    const ExactScalar rhs_n = evaluate_ode_poly(spec.rhs, y, dy).coeff(MultiIndex{n});
    TruncatedSeries lead = TruncatedSeries::constant(1, n + 1, ExactScalar(spec.lead.empty() ? 1 : 0));
    for (std::size_t p = 0; p < spec.lead.size(); ++p) lead = add(lead, spec.lead[p] * pow(y, static_cast<unsigned>(p)));
    ExactScalar acc = rhs_n;
    for (unsigned m = 0; m < n; ++m) acc -= lead.coeff(MultiIndex{n - m}) * w[m];
    const ExactScalar l0 = lead.constant_term();
    if (l0.is_zero()) fail(ErrorCode::unsupported_ode, "singular recurrence at the initial point");
    w.push_back(acc / l0);
    a[n + 2] = w.back() / ExactScalar(static_cast<long>((n + 1) * (n + 2)));
  }
  a.resize(order);
  return a;
}

}  // namespace

TruncatedSeries generate_series(const OdeSpec& spec, unsigned order) {
  if (order < 2) fail(ErrorCode::invalid_input, "series order must be at least 2");
  validate_ode_spec(spec);
  std::vector<ExactScalar> a(order);
  switch (spec.kind) {
    case OdeKind::exp:
      a[0] = 1;
      for (unsigned n = 1; n < order; ++n) a[n] = a[n - 1] / ExactScalar(static_cast<long>(n));
      break;
    case OdeKind::sin:
    case OdeKind::cos:
      // y'' = -y
      a[0] = spec.kind == OdeKind::cos ? 1 : 0;
      a[1] = spec.kind == OdeKind::sin ? 1 : 0;
      for (unsigned n = 0; n + 2 < order; ++n) a[n + 2] = -a[n] / ExactScalar(static_cast<long>((n + 1) * (n + 2)));
      break;
    case OdeKind::tan:
      // y' = 1 + y^2
      for (unsigned n = 0; n + 1 < order; ++n) {
        ExactScalar conv(n == 0 ? 1 : 0);
        for (unsigned i = 0; i <= n; ++i) conv.add_product(a[i], a[n - i]);
        a[n + 1] = conv / ExactScalar(static_cast<long>(n + 1));
      }
      break;
    case OdeKind::weierstrass_p:
      a = weierstrass_coeffs(spec, order);
      break;
    case OdeKind::weierstrass_p_prime: {
      const auto p = weierstrass_coeffs(spec, order + 1);
      for (unsigned n = 0; n < order; ++n) a[n] = p[n + 1] * ExactScalar(static_cast<long>(n + 1));
      break;
    }
    case OdeKind::custom:
      a = custom_coeffs(spec, order);
      break;
  }
  return TruncatedSeries::univariate(order, a);
}

// ---------------------------------------------------------------------------

GermMap::GermMap(std::vector<TruncatedSeries> components, Field field, std::string provenance)
    : components_(std::move(components)), field_(field), provenance_(std::move(provenance)) {
  const std::size_t n = components_.size();
  if (n == 0) fail(ErrorCode::invalid_input, "germ map must have dimension >= 1");
  for (const auto& c : components_) {
    if (c.vars() != n) fail(ErrorCode::variable_mismatch, "germ component has wrong variable count");
    if (c.order() != components_.front().order())
      fail(ErrorCode::invalid_input, "germ components must share one truncation order");
    if (field_ == Field::rat)
      for (const auto& t : c.terms())
        if (!t.coeff.is_real()) fail(ErrorCode::invalid_input, "Gaussian coefficient in a RAT germ");
  }
}

GermMap GermMap::truncated(unsigned order) const {
  std::vector<TruncatedSeries> c;
  for (const auto& s : components_) c.push_back(s.truncated(order));
  return GermMap(std::move(c), field_, provenance_);
}

GermMap product_germ(std::span<const TruncatedSeries> factors, Field field, std::string provenance) {
  const std::size_t n = factors.size();
  std::vector<TruncatedSeries> comps;
  for (std::size_t i = 0; i < n; ++i) {
    if (factors[i].vars() != 1) fail(ErrorCode::variable_mismatch, "product factors must be univariate");
    const std::size_t map[1] = {i};
    comps.push_back(factors[i].embedded(n, map));
  }
  return GermMap(std::move(comps), field, std::move(provenance));
}

ScalarMatrix linear_part(const GermMap& m) {
  const std::size_t n = m.dimension();
  if (m.order() < 2) fail(ErrorCode::invalid_input, "linear part needs order >= 2");
  ScalarMatrix j(n, std::vector<ExactScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) j[i][k] = m[i].coeff(MultiIndex::unit(n, k));
  return j;
}

bool conjugation_fixed(const GermMap& m) {
  for (const auto& c : m.components())
    for (const auto& t : c.terms())
      if (!t.coeff.is_real()) return false;
  return true;
}

GermMap compose_linear(const GermMap& g, const ScalarMatrix& alpha) {
  const std::size_t n = g.dimension();
  if (!is_square(alpha, n)) fail(ErrorCode::arity_mismatch, "alpha must be an n x n matrix");
  std::vector<TruncatedSeries> inner;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SeriesTerm> terms;
    for (std::size_t k = 0; k < n; ++k) terms.push_back({MultiIndex::unit(n, k), alpha[j][k]});
    inner.push_back(TruncatedSeries::from_terms(n, g.order(), std::move(terms)));
  }
  Field field = g.field();
  for (const auto& row : alpha)
    for (const auto& x : row)
      if (!x.is_real()) field = Field::gauss;
  std::vector<TruncatedSeries> comps;
  for (const auto& c : g.components()) comps.push_back(compose(c, inner));
  return GermMap(std::move(comps), field, g.provenance() + " composed with a linear map");
}

GermMap reversion(const GermMap& m) {
  const std::size_t n = m.dimension();
  const unsigned order = m.order();
  const ScalarMatrix ainv = inverse(linear_part(m));
  // centred germ psi = phi - phi(0) = A u + H(u), H of order >= 2;
  // rho = A^{-1}(x - H(rho)) gains one correct degree per sweep.
  std::vector<TruncatedSeries> higher;
  for (const auto& c : m.components()) {
    std::vector<SeriesTerm> terms;
    for (const auto& t : c.terms())
      if (t.index.total_degree() >= 2) terms.push_back(t);
    higher.push_back(TruncatedSeries::from_terms(n, order, std::move(terms)));
  }
  auto apply_ainv = [&](const std::vector<TruncatedSeries>& v) {
    std::vector<TruncatedSeries> out;
    for (std::size_t i = 0; i < n; ++i) {
      TruncatedSeries acc(n, order);
      for (std::size_t k = 0; k < n; ++k) acc = add(acc, ainv[i][k] * v[k]);
      out.push_back(std::move(acc));
    }
    return out;
  };
  std::vector<TruncatedSeries> x;
  for (std::size_t k = 0; k < n; ++k) x.push_back(TruncatedSeries::variable(n, order, k));
  std::vector<TruncatedSeries> rho = apply_ainv(x);
  for (unsigned sweep = 2; sweep < order; ++sweep) {
    std::vector<TruncatedSeries> rhs;
    for (std::size_t k = 0; k < n; ++k) rhs.push_back(sub(x[k], compose(higher[k], rho)));
    rho = apply_ainv(rhs);
  }
  return GermMap(std::move(rho), m.field(), "inverse of " + m.provenance());
}

}  // namespace aatkit
