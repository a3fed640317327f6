#include "aatkit/aat.hpp"

#include "aatkit/error.hpp"

#include <numeric>

namespace aatkit {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::unresolved: return "UNRESOLVED";
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  if (s == "PASS") return Verdict::pass;
  if (s == "FAIL") return Verdict::fail;
  if (s == "UNRESOLVED") return Verdict::unresolved;
  fail(ErrorCode::parse_error, "unknown verdict '" + std::string(s) + "'");
}

std::vector<std::string> aat_basis_names(std::size_t n) { return default_names(2 * n); }

namespace {

struct Blocks {
  std::vector<std::size_t> parent;
  explicit Blocks(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<TruncatedSeries> two_block_basis(const GermMap& m) {
  const std::size_t n = m.dimension();
  std::vector<TruncatedSeries> basis;
  std::vector<std::size_t> map(n);
  for (std::size_t side = 0; side < 2; ++side)
    for (const auto& c : m.components()) {
      for (std::size_t k = 0; k < n; ++k) map[k] = side * n + k;
      basis.push_back(c.embedded(2 * n, map));
    }
  return basis;
}

// Indices of the basis series connected to the target through shared
// coordinates.
std::vector<std::size_t> connected_basis(const TruncatedSeries& target, const std::vector<TruncatedSeries>& basis) {
  const std::size_t k = target.vars();
  Blocks blocks(k);
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& b : basis) supports.push_back(b.support());
  const auto tsupp = target.support();
  for (const auto& s : supports)
    for (std::size_t j = 1; j < s.size(); ++j) blocks.join(s[0], s[j]);
  for (std::size_t j = 1; j < tsupp.size(); ++j) blocks.join(tsupp[0], tsupp[j]);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (tsupp.empty()) {
      if (supports[i].empty()) keep.push_back(i);
    } else if (!supports[i].empty() && blocks.find(supports[i][0]) == blocks.find(tsupp[0])) {
      keep.push_back(i);
    }
  }
  return keep;
}

// Re-states an annihilator over (kept basis..., z) in the full basis.
Annihilator widen(const Annihilator& a, const std::vector<std::size_t>& keep, std::size_t basis_size,
                  std::vector<std::string> names) {
  Annihilator out = a;
  out.names = std::move(names);
  Polynomial p(basis_size + 1);
  for (const auto& [mono, c] : a.poly.terms()) {
    MultiIndex m(basis_size + 1);
    for (std::size_t i = 0; i < keep.size(); ++i) m[keep[i]] = mono[i];
    m[basis_size] = mono[keep.size()];
    p.add_term(m, c);
  }
  out.poly = std::move(p);
  return out;
}

DependenceVerdict widen(DependenceVerdict v, const std::vector<std::size_t>& keep, std::size_t basis_size,
                        const std::vector<std::string>& names) {
  if (v.annihilator) v.annihilator = widen(*v.annihilator, keep, basis_size, names);
  if (v.rejected) v.rejected = widen(*v.rejected, keep, basis_size, names);
  return v;
}

void require_margin(const GermMap& m, unsigned N) {
  if (m.order() < N + kReverifyMargin)
    fail(ErrorCode::order_exceeded, "germ order " + std::to_string(m.order()) + " is below N + " +
                                        std::to_string(kReverifyMargin) + " = " + std::to_string(N + kReverifyMargin));
}

Verdict aat_status(const std::vector<DependenceVerdict>& comps, const DependenceVerdict& indep) {
  if (indep.outcome == DependenceOutcome::dependent) return Verdict::fail;
  if (indep.outcome == DependenceOutcome::unconfirmed) return Verdict::unresolved;
  for (const auto& c : comps)
    if (!c.dependent()) return Verdict::unresolved;
  return Verdict::pass;
}

SearchOptions named(SearchOptions o, std::vector<std::string> names) {
  o.basis_names = std::move(names);
  o.target_name = "z";
  return o;
}

}  // namespace

AatCertificate check_aat(const GermMap& m, unsigned d, unsigned N, const SearchOptions& options) {
  if (N <= d)
    fail(ErrorCode::order_too_low, "order " + std::to_string(N) + " must exceed degree bound " + std::to_string(d));
  require_margin(m, N);
  const std::size_t n = m.dimension();
  const unsigned wide = N + kReverifyMargin;
  const auto basis = two_block_basis(m.truncated(wide));
  const auto names = aat_basis_names(n);

  AatCertificate cert;
  cert.germ = m.truncated(wide);
  cert.degree_bound = d;
  cert.order = N;
  for (std::size_t i = 0; i < n; ++i) {
    const TruncatedSeries target = block_sum_substitute(m[i], wide);
    const auto keep = connected_basis(target, basis);
    std::vector<TruncatedSeries> sub;
    std::vector<std::string> sub_names;
    for (std::size_t j : keep) {
      sub.push_back(basis[j]);
      sub_names.push_back(names[j]);
    }
    auto v = find_annihilator(target, sub, d, N, named(options, sub_names));
    cert.components.push_back(widen(std::move(v), keep, basis.size(), [&] {
      auto all = names;
      all.push_back("z");
      return all;
    }()));
  }
  cert.independence =
      independence_verdict(cert.germ.components(), d, N, named(options, default_names(n)));
  cert.status = aat_status(cert.components, cert.independence);
  return cert;
}

AatRecheck recheck_aat(const AatCertificate& c, const SearchOptions& options) {
  AatRecheck out;
  const GermMap& m = c.germ;
  const std::size_t n = m.dimension();
  const unsigned N = c.order;
  if (c.components.size() != n) {
    out.ok = false;
    out.message = "certificate lists " + std::to_string(c.components.size()) + " components for a germ of dimension " +
                  std::to_string(n);
    return out;
  }
  require_margin(m, N);
  const unsigned wide = N + kReverifyMargin;
  auto assignment = two_block_basis(m);
  assignment.push_back(TruncatedSeries{});
  for (std::size_t i = 0; i < n; ++i) {
    assignment.back() = block_sum_substitute(m[i], wide);
    const auto& v = c.components[i];
    if (v.dependent()) {
      out.at_order.push_back(verify_annihilator(*v.annihilator, assignment, N));
      out.at_margin.push_back(verify_annihilator(*v.annihilator, assignment, wide));
      if (!out.at_order.back().clean || !out.at_margin.back().clean) {
        out.ok = false;
        out.message = "annihilator of component " + std::to_string(i + 1) + " leaves " + out.at_margin.back().describe();
      }
    } else {
      out.at_order.emplace_back();
      out.at_margin.emplace_back();
    }
  }
  const auto indep = independence_verdict(m.components(), c.degree_bound, N, named(options, default_names(n)));
  if (indep.outcome != c.independence.outcome) {
    out.ok = false;
    out.message = "independence verdict recomputes as " + std::string(outcome_name(indep.outcome));
  }
  if (aat_status(c.components, c.independence) != c.status) {
    out.ok = false;
    out.message = "status does not follow from the stored verdicts";
  }
  return out;
}

ConditionStar check_condition_star(const GermMap& m) {
  ConditionStar s;
  s.linear = linear_part(m);
  s.det = determinant(s.linear);
  s.verdict = s.det.is_zero() ? Verdict::fail : Verdict::pass;
  return s;
}

Promotion promote_real_to_complex(const GermMap& m) {
  Promotion p;
  p.conjugation_fixed = conjugation_fixed(m);
  p.star = check_condition_star(m);
  p.verdict = p.conjugation_fixed && p.star.verdict == Verdict::pass ? Verdict::pass : Verdict::fail;
  return p;
}

// ---------------------------------------------------------------------------

namespace {

ResidualReport report_of(const TruncatedSeries& r, unsigned N) {
  ResidualReport rep;
  rep.order = N;
  rep.clean = r.is_zero();
  if (!rep.clean) rep.residual = r.first_nonzero();
  return rep;
}

void require_unit(const RationalFunction& f, std::span<const ExactScalar> at, const std::string& what) {
  if (f.den.vars() != at.size() || f.num.vars() != at.size())
    fail(ErrorCode::arity_mismatch, what + " has the wrong number of variables");
  if (f.den.evaluate(at).is_zero())
    fail(ErrorCode::denominator_not_unit, what + " has a denominator vanishing at the base point");
}

}  // namespace

SystemReport verify_rational_system(const RationalAdditionSystem& sys, unsigned N) {
  if (sys.psi.empty()) fail(ErrorCode::invalid_input, "rational system needs at least one series");
  const std::size_t m = sys.psi.size();
  const std::size_t n = sys.psi.front().vars();
  for (const auto& s : sys.psi) {
    if (s.vars() != n) fail(ErrorCode::variable_mismatch, "system series live in different rings");
    if (s.order() < N)
      fail(ErrorCode::order_exceeded, "series order " + std::to_string(s.order()) + " is below " + std::to_string(N));
  }
  std::vector<ExactScalar> base;
  for (const auto& s : sys.psi) base.push_back(s.constant_term());
  std::vector<ExactScalar> base2 = base;
  base2.insert(base2.end(), base.begin(), base.end());

  SystemReport rep;
  rep.order = N;
  auto record = [&](std::string kind, std::size_t i, ResidualReport r) {
    rep.clean = rep.clean && r.clean;
    rep.checks.push_back({std::move(kind), i, std::move(r)});
  };

  if (!sys.addition.empty()) {
    std::vector<TruncatedSeries> uv;
    std::vector<std::size_t> map(n);
    for (std::size_t side = 0; side < 2; ++side)
      for (const auto& s : sys.psi) {
        for (std::size_t k = 0; k < n; ++k) map[k] = side * n + k;
        uv.push_back(s.truncated(N).embedded(2 * n, map));
      }
    for (const auto& [i, f] : sys.addition) {
      if (i >= m) fail(ErrorCode::arity_mismatch, "addition entry for a missing component");
      require_unit(f, base2, "addition formula " + std::to_string(i));
      const TruncatedSeries lhs = block_sum_substitute(sys.psi[i], N);
      const TruncatedSeries r = sub(mul(lhs, f.den.substitute(uv, N)), f.num.substitute(uv, N));
      record("addition", i, report_of(r, N));
    }
  }
  std::vector<TruncatedSeries> u;
  for (const auto& s : sys.psi) u.push_back(s.truncated(N));
  for (const auto& [i, f] : sys.negation) {
    if (i >= m) fail(ErrorCode::arity_mismatch, "negation entry for a missing component");
    require_unit(f, base, "negation formula " + std::to_string(i));
    const TruncatedSeries r = sub(mul(negate_argument(u[i]), f.den.substitute(u, N)), f.num.substitute(u, N));
    record("negation", i, report_of(r, N));
  }
  if (sys.relation) {
    if (sys.relation->vars() != m) fail(ErrorCode::arity_mismatch, "relation has the wrong number of variables");
    record("relation", 0, report_of(sys.relation->substitute(u, N), N));
  }
  return rep;
}

// ---------------------------------------------------------------------------

IsoWitness isomorphism_witness_check(const GermMap& f, const GermMap& g, const ScalarMatrix& alpha, unsigned d,
                                     unsigned N, const SearchOptions& options) {
  const std::size_t n = f.dimension();
  if (g.dimension() != n) fail(ErrorCode::arity_mismatch, "f and g have different dimensions");
  if (!is_square(alpha, n)) fail(ErrorCode::arity_mismatch, "alpha must be an n x n matrix");
  if (determinant(alpha).is_zero()) fail(ErrorCode::singular_alpha, "alpha is not invertible");
  const GermMap h = compose_linear(g, alpha);
  IsoWitness w;
  w.alpha = alpha;
  w.degree_bound = d;
  w.order = N;
  const SearchOptions opts = named(options, default_names(n));
  for (std::size_t i = 0; i < n; ++i) w.components.push_back(find_annihilator(h[i], f.components(), d, N, opts));
  w.verdict = Verdict::pass;
  for (const auto& c : w.components)
    if (!c.dependent()) w.verdict = Verdict::unresolved;
  return w;
}

// ---------------------------------------------------------------------------

std::vector<TruncatedSeries> group_law(const GermMap& m) {
  const std::size_t n = m.dimension();
  const unsigned order = m.order();
  const GermMap inv = reversion(m);
  // psi^-1(a) + psi^-1(b) in 2n variables
  std::vector<TruncatedSeries> inner;
  std::vector<std::size_t> ua(n), vb(n);
  for (std::size_t k = 0; k < n; ++k) {
    ua[k] = k;
    vb[k] = n + k;
  }
  for (std::size_t k = 0; k < n; ++k) inner.push_back(add(inv[k].embedded(2 * n, ua), inv[k].embedded(2 * n, vb)));
  std::vector<TruncatedSeries> out;
  for (const auto& c : m.components()) {
    const TruncatedSeries centred = sub(c, TruncatedSeries::constant(n, order, c.constant_term()));
    out.push_back(compose(centred, inner));
  }
  return out;
}

GroupLawCheck group_law_check(const GermMap& m, unsigned d, unsigned N, const SearchOptions& options) {
  require_margin(m, N);
  const std::size_t n = m.dimension();
  const auto law = group_law(m.truncated(N + kReverifyMargin));
  std::vector<TruncatedSeries> coords;
  for (std::size_t k = 0; k < 2 * n; ++k) coords.push_back(TruncatedSeries::variable(2 * n, N + kReverifyMargin, k));
  std::vector<std::string> names = default_names(n, "a");
  for (const auto& s : default_names(n, "b")) names.push_back(s);
  GroupLawCheck out;
  out.verdict = Verdict::pass;
  for (const auto& phi : law) {
    out.components.push_back(find_annihilator(phi, coords, d, N, named(options, names)));
    if (!out.components.back().dependent()) out.verdict = Verdict::unresolved;
  }
  return out;
}

}  // namespace aatkit
