#include "aatkit/json_io.hpp"

#include "aatkit/error.hpp"

namespace aatkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse_error, what); }

const Json& req(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

const Json* opt(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

unsigned small(const Json& j, const char* what) {
  const std::size_t v = count(j, what);
  if (v > 1000000) bad(std::string(what) + " is out of range");
  return static_cast<unsigned>(v);
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) bad(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

DependenceOutcome parse_outcome(const std::string& s) {
  for (auto o : {DependenceOutcome::dependent, DependenceOutcome::independent_up_to, DependenceOutcome::unconfirmed})
    if (outcome_name(o) == s) return o;
  bad("unknown dependence outcome '" + s + "'");
}

std::vector<std::string> prefixed(const std::string& p, std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(p + std::to_string(i));
  return out;
}

std::vector<std::string> system_names(std::size_t m) {
  auto x = prefixed("x", m);
  auto y = prefixed("y", m);
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

Json terms_json(const Polynomial& p) {
  Json t = Json::array();
  for (const auto& [m, c] : p.terms()) t.push_back(Json::array({to_json(m), to_json(c)}));
  return t;
}

Json rational_entries(const std::vector<std::pair<std::size_t, RationalFunction>>& v,
                      std::span<const std::string> names) {
  Json a = Json::array();
  for (const auto& [i, f] : v) a.push_back({{"index", i}, {"num", to_json(f.num, names)}, {"den", to_json(f.den, names)}});
  return a;
}

std::vector<std::pair<std::size_t, RationalFunction>> rational_entries_from(const Json& j,
                                                                            std::span<const std::string> names) {
  std::vector<std::pair<std::size_t, RationalFunction>> out;
  for (const auto& e : array(j, "rational entries"))
    out.push_back({count(req(e, "index"), "index"),
                   {polynomial_from(req(e, "num"), names), polynomial_from(req(e, "den"), names)}});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Json to_json(const ExactScalar& x) {
  if (x.is_real()) return rational_string(x.re());
  return {{"re", rational_string(x.re())}, {"im", rational_string(x.im())}};
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational as \"p/q\"");
}

ExactScalar scalar_from(const Json& j) {
  if (j.is_object()) return {rational_from(req(j, "re")), rational_from(req(j, "im"))};
  return ExactScalar(rational_from(j));
}

Json to_json(const MultiIndex& m) {
  Json a = Json::array();
  for (unsigned e : m.exponents()) a.push_back(e);
  return a;
}

MultiIndex index_from(const Json& j, std::size_t vars) {
  if (!j.is_array() || j.size() != vars) bad("exponent vector must have " + std::to_string(vars) + " entries");
  std::vector<unsigned> e;
  for (const auto& x : j) e.push_back(small(x, "exponent"));
  return MultiIndex(std::move(e));
}

Json to_json(const TruncatedSeries& s) {
  Json t = Json::array();
  for (const auto& term : s.terms()) t.push_back(Json::array({to_json(term.index), to_json(term.coeff)}));
  return {{"vars", s.vars()}, {"order", s.order()}, {"terms", std::move(t)}};
}

TruncatedSeries series_from(const Json& j) {
  const std::size_t vars = count(req(j, "vars"), "vars");
  const unsigned order = small(req(j, "order"), "order");
  std::vector<SeriesTerm> terms;
  for (const auto& t : array(req(j, "terms"), "terms")) {
    if (!t.is_array() || t.size() != 2) bad("series term must be [index, coefficient]");
    MultiIndex m = index_from(t[0], vars);
    if (m.total_degree() >= order) bad("series term at or above the truncation order");
    terms.push_back({std::move(m), scalar_from(t[1])});
  }
  return TruncatedSeries::from_terms(vars, order, std::move(terms));
}

Json to_json(const OdeSpec& s) {
  Json j{{"kind", ode_kind_name(s.kind)}};
  if (s.kind == OdeKind::weierstrass_p || s.kind == OdeKind::weierstrass_p_prime) {
    j["g2"] = to_json(s.g2);
    j["g3"] = to_json(s.g3);
    j["p0"] = to_json(s.p0);
    j["p1"] = to_json(s.p1);
  } else if (s.kind == OdeKind::custom) {
    Json rhs = Json::array();
    for (const auto& [e, c] : s.rhs.terms) rhs.push_back(Json::array({Json::array({e.first, e.second}), to_json(c)}));
    Json lead = Json::array();
    for (const auto& c : s.lead) lead.push_back(to_json(c));
    j["rhs"] = std::move(rhs);
    j["lead"] = std::move(lead);
    j["y0"] = to_json(s.y0);
    j["dy0"] = to_json(s.dy0);
  }
  return j;
}

OdeSpec ode_from(const Json& j) {
  OdeSpec s;
  s.kind = parse_ode_kind(str(req(j, "kind"), "kind"));
  if (s.kind == OdeKind::weierstrass_p || s.kind == OdeKind::weierstrass_p_prime) {
    s.g2 = scalar_from(req(j, "g2"));
    s.g3 = scalar_from(req(j, "g3"));
    s.p0 = scalar_from(req(j, "p0"));
    s.p1 = scalar_from(req(j, "p1"));
  } else if (s.kind == OdeKind::custom) {
    if (const Json* rhs = opt(j, "rhs"))
      for (const auto& t : array(*rhs, "rhs")) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2)
          bad("rhs term must be [[e_y, e_dy], coefficient]");
        s.rhs.terms.push_back({{small(t[0][0], "exponent"), small(t[0][1], "exponent")}, scalar_from(t[1])});
      }
    if (const Json* lead = opt(j, "lead"))
      for (const auto& c : array(*lead, "lead")) s.lead.push_back(scalar_from(c));
    s.y0 = scalar_from(req(j, "y0"));
    s.dy0 = scalar_from(req(j, "dy0"));
  }
  validate_ode_spec(s);
  return s;
}

Json to_json(const GermMap& m) {
  Json c = Json::array();
  for (const auto& s : m.components()) c.push_back(to_json(s));
  return {{"dimension", m.dimension()},
          {"field", field_name(m.field())},
          {"provenance", m.provenance()},
          {"components", std::move(c)}};
}

GermMap germ_from(const Json& j) {
  const Field field = opt(j, "field") ? parse_field(str(j["field"], "field")) : Field::rat;
  if (const Json* odes = opt(j, "odes")) {
    const unsigned order = small(req(j, "order"), "order");
    std::vector<TruncatedSeries> factors;
    std::string prov;
    for (const auto& o : array(*odes, "odes")) {
      const OdeSpec s = ode_from(o);
      factors.push_back(generate_series(s, order));
      if (!prov.empty()) prov += " x ";
      prov += s.describe();
    }
    if (factors.empty()) bad("odes must not be empty");
    return product_germ(factors, field, prov);
  }
  std::vector<TruncatedSeries> comps;
  for (const auto& s : array(req(j, "components"), "components")) comps.push_back(series_from(s));
  if (const Json* d = opt(j, "dimension"))
    if (count(*d, "dimension") != comps.size()) bad("dimension does not match the component count");
  const std::string prov = opt(j, "provenance") ? str(j["provenance"], "provenance") : std::string();
  return GermMap(std::move(comps), field, prov);
}

Json to_json(const Polynomial& p, std::span<const std::string> names) {
  return {{"names", Json(std::vector<std::string>(names.begin(), names.end()))},
          {"terms", terms_json(p)},
          {"text", p.to_string(names)}};
}

Polynomial polynomial_from(const Json& j, std::span<const std::string> names) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), names);
  std::vector<std::string> own(names.begin(), names.end());
  if (const Json* n = opt(j, "names")) {
    own.clear();
    for (const auto& x : array(*n, "names")) own.push_back(str(x, "variable name"));
    if (!names.empty() && own != std::vector<std::string>(names.begin(), names.end()))
      bad("polynomial variables do not match the expected names");
  }
  if (const Json* t = opt(j, "terms")) {
    Polynomial p(own.size());
    for (const auto& term : array(*t, "terms")) {
      if (!term.is_array() || term.size() != 2) bad("polynomial term must be [index, coefficient]");
      p.add_term(index_from(term[0], own.size()), scalar_from(term[1]));
    }
    return p;
  }
  return parse_polynomial(str(req(j, "text"), "text"), own);
}

Json to_json(const ResidualReport& r) {
  Json j{{"clean", r.clean}, {"order", r.order}, {"status", r.describe()}, {"residual", nullptr}};
  if (r.residual) j["residual"] = {{"index", to_json(r.residual->index)}, {"coeff", to_json(r.residual->coeff)}};
  return j;
}

ResidualReport residual_from(const Json& j) {
  ResidualReport r;
  r.clean = boolean(req(j, "clean"), "clean");
  r.order = small(req(j, "order"), "order");
  if (const Json* res = opt(j, "residual")) {
    const Json& idx = req(*res, "index");
    r.residual = SeriesTerm{index_from(idx, idx.is_array() ? idx.size() : 0), scalar_from(req(*res, "coeff"))};
  }
  return r;
}

Json to_json(const Annihilator& a) {
  return {{"names", a.names},
          {"poly", to_json(a.poly, a.names)},
          {"degree", a.degree},
          {"verified_order", a.verified_order},
          {"residual", to_json(a.residual)},
          {"has_target", a.has_target}};
}

Annihilator annihilator_from(const Json& j) {
  Annihilator a;
  for (const auto& n : array(req(j, "names"), "names")) a.names.push_back(str(n, "variable name"));
  a.poly = polynomial_from(req(j, "poly"), a.names);
  if (a.poly.is_zero()) fail(ErrorCode::invalid_input, "annihilator polynomial is zero");
  a.degree = opt(j, "degree") ? small(j["degree"], "degree") : a.poly.total_degree();
  if (a.degree != a.poly.total_degree()) fail(ErrorCode::invalid_input, "stated degree differs from the polynomial's");
  a.verified_order = opt(j, "verified_order") ? small(j["verified_order"], "verified_order") : 0;
  if (const Json* r = opt(j, "residual")) a.residual = residual_from(*r);
  a.has_target = opt(j, "has_target") ? boolean(j["has_target"], "has_target") : false;
  return a;
}

Json to_json(const DependenceVerdict& v) {
  Json j{{"outcome", outcome_name(v.outcome)},
         {"degree_bound", v.degree_bound},
         {"order", v.order},
         {"unknowns", v.unknowns},
         {"equations", v.equations},
         {"kernel_dimension", v.kernel_dimension},
         {"basis_dependent", v.basis_dependent},
         {"annihilator", nullptr},
         {"rejected", nullptr}};
  if (v.annihilator) j["annihilator"] = to_json(*v.annihilator);
  if (v.rejected) j["rejected"] = to_json(*v.rejected);
  return j;
}

DependenceVerdict verdict_from(const Json& j) {
  DependenceVerdict v;
  v.outcome = parse_outcome(str(req(j, "outcome"), "outcome"));
  v.degree_bound = small(req(j, "degree_bound"), "degree_bound");
  v.order = small(req(j, "order"), "order");
  if (const Json* x = opt(j, "unknowns")) v.unknowns = count(*x, "unknowns");
  if (const Json* x = opt(j, "equations")) v.equations = count(*x, "equations");
  if (const Json* x = opt(j, "kernel_dimension")) v.kernel_dimension = count(*x, "kernel_dimension");
  if (const Json* x = opt(j, "basis_dependent")) v.basis_dependent = boolean(*x, "basis_dependent");
  if (const Json* a = opt(j, "annihilator")) v.annihilator = annihilator_from(*a);
  if (const Json* a = opt(j, "rejected")) v.rejected = annihilator_from(*a);
  if (v.dependent() && !v.annihilator) bad("DEPENDENT verdict without an annihilator");
  return v;
}

Json to_json(const AatCertificate& c) {
  Json comps = Json::array();
  for (const auto& v : c.components) comps.push_back(to_json(v));
  return {{"germ", to_json(c.germ)},
          {"degree_bound", c.degree_bound},
          {"order", c.order},
          {"components", std::move(comps)},
          {"independence", to_json(c.independence)},
          {"status", verdict_name(c.status)}};
}

AatCertificate certificate_from(const Json& j) {
  AatCertificate c;
  c.germ = germ_from(req(j, "germ"));
  c.degree_bound = small(req(j, "degree_bound"), "degree_bound");
  c.order = small(req(j, "order"), "order");
  for (const auto& v : array(req(j, "components"), "components")) c.components.push_back(verdict_from(v));
  c.independence = verdict_from(req(j, "independence"));
  c.status = parse_verdict(str(req(j, "status"), "status"));
  return c;
}

Json to_json(const ScalarMatrix& a) {
  Json rows = Json::array();
  for (const auto& r : a) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

ScalarMatrix matrix_from(const Json& j) {
  ScalarMatrix a;
  // "[2]" is shorthand for the 1 x 1 matrix [[2]]
  if (j.is_array() && !j.empty() && !j[0].is_array()) {
    if (j.size() != 1) bad("a flat matrix must have exactly one entry");
    return {{scalar_from(j[0])}};
  }
  for (const auto& r : array(j, "matrix")) {
    std::vector<ExactScalar> row;
    for (const auto& x : array(r, "matrix row")) row.push_back(scalar_from(x));
    a.push_back(std::move(row));
  }
  if (a.empty() || !is_square(a, a.size())) bad("matrix must be square and non-empty");
  return a;
}

Json to_json(const ConditionStar& s) {
  return {{"verdict", verdict_name(s.verdict)}, {"linear_part", to_json(s.linear)}, {"det", to_json(s.det)}};
}

Json to_json(const Promotion& p) {
  return {{"verdict", verdict_name(p.verdict)},
          {"conjugation_fixed", p.conjugation_fixed},
          {"condition_star", to_json(p.star)}};
}

Json to_json(const RationalAdditionSystem& s) {
  Json psi = Json::array();
  for (const auto& x : s.psi) psi.push_back(to_json(x));
  const std::size_t m = s.psi.size();
  const auto an = system_names(m);
  const auto nn = prefixed("x", m);
  return {{"psi", std::move(psi)},
          {"addition", rational_entries(s.addition, an)},
          {"negation", rational_entries(s.negation, nn)},
          {"relation", s.relation ? to_json(*s.relation, nn) : Json(nullptr)}};
}

RationalAdditionSystem system_from(const Json& j) {
  RationalAdditionSystem s;
  for (const auto& x : array(req(j, "psi"), "psi")) s.psi.push_back(series_from(x));
  const std::size_t m = s.psi.size();
  const auto an = system_names(m);
  const auto nn = prefixed("x", m);
  if (const Json* a = opt(j, "addition")) s.addition = rational_entries_from(*a, an);
  if (const Json* q = opt(j, "negation")) s.negation = rational_entries_from(*q, nn);
  if (const Json* r = opt(j, "relation")) s.relation = polynomial_from(*r, nn);
  return s;
}

Json to_json(const SystemReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"kind", c.kind}, {"index", c.index}, {"residual", to_json(c.residual)}});
  return {{"clean", r.clean}, {"order", r.order}, {"checks", std::move(checks)}};
}

Json to_json(const IsoWitness& w) {
  Json comps = Json::array();
  for (const auto& v : w.components) comps.push_back(to_json(v));
  return {{"verdict", verdict_name(w.verdict)},
          {"alpha", to_json(w.alpha)},
          {"degree_bound", w.degree_bound},
          {"order", w.order},
          {"components", std::move(comps)}};
}

IsoWitness iso_from(const Json& j) {
  IsoWitness w;
  w.verdict = parse_verdict(str(req(j, "verdict"), "verdict"));
  w.alpha = matrix_from(req(j, "alpha"));
  w.degree_bound = small(req(j, "degree_bound"), "degree_bound");
  w.order = small(req(j, "order"), "order");
  for (const auto& v : array(req(j, "components"), "components")) w.components.push_back(verdict_from(v));
  return w;
}

Json to_json(const GroupLawCheck& g) {
  Json comps = Json::array();
  for (const auto& v : g.components) comps.push_back(to_json(v));
  return {{"verdict", verdict_name(g.verdict)}, {"components", std::move(comps)}};
}

// ---------------------------------------------------------------------------

Json to_json(const SymbolTable& t) {
  Json a = Json::array();
  for (const auto& s : t.symbols()) {
    Json e{{"name", s.name}};
    if (s.decimal) e["decimal"] = *s.decimal;
    a.push_back(std::move(e));
  }
  return a;
}

SymbolTable symbols_from(const Json& j) {
  std::vector<SymbolTable::Symbol> syms;
  for (const auto& e : array(j, "symbols")) {
    SymbolTable::Symbol s;
    s.name = str(req(e, "name"), "symbol name");
    if (const Json* d = opt(e, "decimal")) s.decimal = str(*d, "decimal");
    syms.push_back(std::move(s));
  }
  return SymbolTable(std::move(syms));
}

Json to_json(const PeriodVector& v, const SymbolTable& t) {
  Json a = Json::array();
  for (const auto& coord : v.coords()) {
    Json c = Json::object();
    for (const auto& [slot, x] : coord) c[slot == 0 ? std::string(kUnitSymbol) : t.symbols()[slot - 1].name] = to_json(x);
    a.push_back(std::move(c));
  }
  return a;
}

PeriodVector period_vector_from(const Json& j, const SymbolTable& t, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("period vector must have " + std::to_string(n) + " coordinates");
  PeriodVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_object()) bad("period coordinate must be an object {symbol: scalar}");
    for (const auto& [k, x] : j[i].items()) v.add(i, k == kUnitSymbol ? 0 : t.require(k) + 1, scalar_from(x));
  }
  return v;
}

Json to_json(const PeriodGroup& g) {
  Json gens = Json::array();
  for (const auto& v : g.generators()) gens.push_back(to_json(v, g.table()));
  return {{"symbols", to_json(g.table())},
          {"dimension", g.dimension()},
          {"generators", std::move(gens)},
          {"zrank", g.zrank()},
          {"rdim", g.rdim()},
          {"discrete", g.is_discrete()},
          {"lattice", g.is_lattice()},
          {"assumption", g.table().assumption()}};
}

PeriodGroup period_group_from(const Json& j) {
  SymbolTable t = opt(j, "symbols") ? symbols_from(j["symbols"]) : SymbolTable();
  const std::size_t n = count(req(j, "dimension"), "dimension");
  if (n == 0) fail(ErrorCode::invalid_input, "period group dimension must be positive");
  std::vector<PeriodVector> gens;
  for (const auto& v : array(req(j, "generators"), "generators")) gens.push_back(period_vector_from(v, t, n));
  PeriodGroup g(std::move(t), n, std::move(gens));
  auto check = [&](const char* key, std::size_t actual) {
    if (const Json* c = opt(j, key))
      if (count(*c, key) != actual) fail(ErrorCode::invalid_input, std::string("cached ") + key + " disagrees with the generators");
  };
  check("zrank", g.zrank());
  check("rdim", g.rdim());
  if (const Json* c = opt(j, "discrete"))
    if (boolean(*c, "discrete") != g.is_discrete()) fail(ErrorCode::invalid_input, "cached discreteness disagrees");
  if (const Json* c = opt(j, "lattice"))
    if (boolean(*c, "lattice") != g.is_lattice()) fail(ErrorCode::invalid_input, "cached lattice flag disagrees");
  return g;
}

Json to_json(const IndexResult& r) {
  static const char* kinds[] = {"FINITE", "INFINITE", "NOT_CONTAINED"};
  return {{"kind", kinds[r.kind]},
          {"index", r.kind == IndexResult::finite ? Json(r.index.get_str()) : Json(nullptr)},
          {"text", r.describe()}};
}

Json to_json(const RankReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back({{"name", row.name}, {"rank", row.rank}});
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json e{{"first", r.rows[p.first].name},
           {"second", r.rows[p.second].name},
           {"verdict", p.comparison.equal ? "EQUAL" : "DIFFERENT"},
           {"ranks", Json::array({p.comparison.rank_f, p.comparison.rank_g})}};
    e["note"] = p.comparison.equal ? "rank does not separate" : "not isomorphic: period ranks differ";
    pairs.push_back(std::move(e));
  }
  return {{"rows", std::move(rows)}, {"pairs", std::move(pairs)}};
}

// ---------------------------------------------------------------------------

Json to_json(const UPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(rational_string(x));
  return c;
}

UPoly upoly_from(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : array(j, "polynomial coefficients")) c.push_back(rational_from(x));
  return UPoly(std::move(c));
}

Json to_json(const RootInterval& r) { return Json::array({rational_string(r.lo), rational_string(r.hi)}); }

RootInterval interval_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("interval must be [lo, hi]");
  RootInterval r{rational_from(j[0]), rational_from(j[1])};
  if (r.hi < r.lo) fail(ErrorCode::invalid_input, "interval has lo > hi");
  return r;
}

Json to_json(const AlgebraicNumber& a) {
  return {{"poly", to_json(a.poly)}, {"interval", to_json(a.where)}, {"text", a.describe()}};
}

AlgebraicNumber algebraic_from(const Json& j) {
  return {upoly_from(req(j, "poly")), interval_from(req(j, "interval"))};
}

Json to_json(const BranchProblem& p) {
  static const std::vector<std::string> names{"x", "y"};
  return {{"poly", to_json(p.p, names)}, {"a", rational_string(p.a)}, {"b", rational_string(p.b)}};
}

BranchProblem branch_problem_from(const Json& j) {
  static const std::vector<std::string> names{"x", "y"};
  BranchProblem p{polynomial_from(req(j, "poly"), names), rational_from(req(j, "a")), rational_from(req(j, "b"))};
  if (p.p.vars() != 2) fail(ErrorCode::variable_mismatch, "branch polynomial must be in (x, y)");
  if (p.b < p.a) fail(ErrorCode::invalid_input, "domain has a > b");
  for (const auto& [m, c] : p.p.terms())
    if (!c.is_real()) fail(ErrorCode::invalid_input, "branch polynomial must have rational coefficients");
  return p;
}

Json to_json(const Cell1D& c) {
  if (c.kind == Cell1D::point) return {{"kind", "POINT"}, {"point", to_json(c.left)}, {"count", c.count}};
  return {{"kind", "OPEN_INTERVAL"},
          {"left", to_json(c.left)},
          {"right", to_json(c.right)},
          {"sample", rational_string(c.sample)},
          {"count", c.count}};
}

Cell1D cell_from(const Json& j) {
  Cell1D c;
  const std::string kind = str(req(j, "kind"), "kind");
  c.count = count(req(j, "count"), "count");
  if (kind == "POINT") {
    c.kind = Cell1D::point;
    c.left = algebraic_from(req(j, "point"));
  } else if (kind == "OPEN_INTERVAL") {
    c.kind = Cell1D::open_interval;
    c.left = algebraic_from(req(j, "left"));
    c.right = algebraic_from(req(j, "right"));
    c.sample = rational_from(req(j, "sample"));
  } else {
    bad("unknown cell kind '" + kind + "'");
  }
  return c;
}

Json to_json(const BranchHandle& h) { return {{"cell", h.cell}, {"branch", h.branch}}; }

BranchHandle handle_from(const Json& j) {
  return {count(req(j, "cell"), "cell"), count(req(j, "branch"), "branch")};
}

// ---------------------------------------------------------------------------

Json to_json(const PeriodCheckReport& r) {
  Json per = Json::array();
  for (const auto& p : r.per_generator) per.push_back({{"generator", p.generator}, {"residual", p.residual}});
  return {{"verdict", verdict_name(r.verdict)}, {"digits", r.digits},          {"samples", r.samples},
          {"tolerance", r.tolerance},           {"max_residual", r.max_residual}, {"per_generator", std::move(per)},
          {"assumption", r.assumption}};
}

Json to_json(const GroupDescriptor& d) {
  Json odes = Json::array();
  for (const auto& o : d.odes) odes.push_back(to_json(o));
  Json comp = nullptr;
  if (d.companion) {
    const std::size_t m = d.companion->psi.size();
    Json psi = Json::array();
    for (const auto& o : d.companion->psi) psi.push_back(to_json(o));
    comp = {{"psi", std::move(psi)},
            {"addition", rational_entries(d.companion->addition, system_names(m))},
            {"negation", rational_entries(d.companion->negation, prefixed("x", m))},
            {"relation", d.companion->relation ? to_json(*d.companion->relation, prefixed("x", m)) : Json(nullptr)}};
  }
  return {{"name", d.name},
          {"field", field_name(d.field)},
          {"dimension", d.dimension},
          {"odes", std::move(odes)},
          {"periods", to_json(d.periods)},
          {"companion", std::move(comp)},
          {"degree_bound", d.degree_bound},
          {"order", d.order}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace aatkit::io
