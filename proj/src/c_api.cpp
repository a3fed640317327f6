#include "aatkit/aatkit.h"

#include "aatkit/error.hpp"
#include "aatkit/json_io.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>

struct aatkit_germ {
  aatkit::GermMap map;
};

struct aatkit_result {
  std::string text;
  int tier = 0;
};

namespace aatkit {
namespace {

using io::Json;

thread_local std::string g_last_error;

struct Outcome {
  Json result;
  std::string verdict;
  int tier = AATKIT_VERDICT_PASS;
};

int tier_of(Verdict v) {
  switch (v) {
    case Verdict::pass: return AATKIT_VERDICT_PASS;
    case Verdict::fail: return AATKIT_VERDICT_FAIL;
    case Verdict::unresolved: return AATKIT_VERDICT_UNRESOLVED;
  }
  return AATKIT_VERDICT_UNRESOLVED;
}

const Json& field(const Json& r, const char* key) {
  if (!r.is_object() || !r.contains(key)) fail(ErrorCode::parse_error, std::string("request lacks '") + key + "'");
  return r.at(key);
}

unsigned uint_field(const Json& r, const char* key) {
  const Json& v = field(r, key);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1000000)
    fail(ErrorCode::parse_error, std::string("'") + key + "' must be a non-negative integer");
  return v.get<unsigned>();
}

unsigned uint_or(const Json& r, const char* key, unsigned dflt) { return r.contains(key) ? uint_field(r, key) : dflt; }

unsigned positive(const Json& r, const char* key) {
  const unsigned v = uint_field(r, key);
  if (v == 0) fail(ErrorCode::invalid_input, std::string("'") + key + "' must be positive");
  return v;
}

SearchOptions options_of(const Json& r) {
  SearchOptions o;
  if (r.contains("max_monomials")) {
    const Json& v = r.at("max_monomials");
    if (!v.is_number_integer() || v.get<long long>() <= 0)
      fail(ErrorCode::parse_error, "'max_monomials' must be a positive integer");
    o.max_monomials = v.get<std::size_t>();
  }
  return o;
}

const GroupDescriptor* catalog_ref(const Json& spec) {
  if (!spec.is_string()) return nullptr;
  const std::string s = spec.get<std::string>();
  static const std::string prefix = "catalog:";
  if (s.rfind(prefix, 0) != 0) fail(ErrorCode::parse_error, "expected a 'catalog:<name>' reference, got '" + s + "'");
  return &catalog_entry(s.substr(prefix.size()));
}

GermMap resolve_germ(const Json& spec, unsigned order) {
  if (const GroupDescriptor* d = catalog_ref(spec)) return d->germ(order);
  return io::germ_from(spec);
}

PeriodGroup resolve_group(const Json& spec) {
  if (const GroupDescriptor* d = catalog_ref(spec)) return d->periods;
  return io::period_group_from(spec);
}

// Accepts a full result document or its bare payload.
const Json& payload(const Json& doc, const char* command, const char* key) {
  if (doc.is_object() && doc.contains("command")) {
    if (doc.at("command") != command)
      fail(ErrorCode::invalid_input, std::string("expected a document from '") + command + "'");
    return field(field(doc, "result"), key);
  }
  return doc;
}

const Json& request_of(const Json& doc, const char* command) {
  if (!doc.is_object() || doc.value("command", "") != command)
    fail(ErrorCode::invalid_input, std::string("expected a document from '") + command + "'");
  return field(doc, "request");
}

Json residual_list(const std::vector<ResidualReport>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(io::to_json(r));
  return a;
}

// ---------------------------------------------------------------------------

Outcome cmd_aat_check(const Json& r) {
  const unsigned d = positive(r, "degree");
  const unsigned N = positive(r, "order");
  const GermMap m = resolve_germ(field(r, "map"), N + kReverifyMargin);
  const AatCertificate c = check_aat(m, d, N, options_of(r));
  return {{{"certificate", io::to_json(c)}}, std::string(verdict_name(c.status)), tier_of(c.status)};
}

Outcome cmd_verify_aat(const Json& r) {
  const Json& doc = field(r, "certificate");
  const AatCertificate c = io::certificate_from(payload(doc, "aat-check", "certificate"));
  const SearchOptions opts = options_of(r);
  AatRecheck re = recheck_aat(c, opts);
  bool searched = false;
  for (const auto& v : c.components) searched = searched || !v.dependent();
  if (re.ok && searched) {
    // negative component claims are re-derived by searching again
    const AatCertificate again = check_aat(c.germ, c.degree_bound, c.order, opts);
    for (std::size_t i = 0; i < c.components.size(); ++i)
      if (again.components[i].outcome != c.components[i].outcome) {
        re.ok = false;
        re.message = "component " + std::to_string(i + 1) + " recomputes as " +
                     std::string(outcome_name(again.components[i].outcome));
      }
  }
  Json res{{"ok", re.ok},
           {"message", re.message},
           {"at_order", residual_list(re.at_order)},
           {"at_margin", residual_list(re.at_margin)},
           {"status", verdict_name(c.status)}};
  return {std::move(res), re.ok ? "VERIFIED" : "REJECTED", re.ok ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_FAIL};
}

std::vector<TruncatedSeries> series_list(const Json& j) {
  std::vector<TruncatedSeries> out;
  if (!j.is_array()) fail(ErrorCode::parse_error, "expected an array of series");
  for (const auto& s : j) out.push_back(io::series_from(s));
  return out;
}

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  if (!j.is_array()) fail(ErrorCode::parse_error, "expected an array of names");
  for (const auto& s : j) {
    if (!s.is_string()) fail(ErrorCode::parse_error, "names must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

DependenceVerdict run_algdep(const Json& r) {
  const unsigned d = positive(r, "degree");
  const unsigned N = positive(r, "order");
  SearchOptions o = options_of(r);
  if (r.contains("basis_names")) o.basis_names = string_list(r.at("basis_names"));
  if (r.contains("target_name")) o.target_name = field(r, "target_name").get<std::string>();
  if (r.contains("series")) return independence_verdict(series_list(r.at("series")), d, N, o);
  const TruncatedSeries target = io::series_from(field(r, "target"));
  return find_annihilator(target, series_list(field(r, "basis")), d, N, o);
}

Outcome verdict_outcome(const DependenceVerdict& v) {
  return {{{"dependence", io::to_json(v)}},
          std::string(outcome_name(v.outcome)),
          v.dependent() ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_UNRESOLVED};
}

Outcome cmd_algdep(const Json& r) { return verdict_outcome(run_algdep(r)); }

Outcome cmd_verify_annihilator(const Json& r) {
  Json res;
  bool ok = true;
  if (r.contains("certificate")) {
    const Json& doc = field(r, "certificate");
    const Json& req = request_of(doc, "algdep");
    const DependenceVerdict v = io::verdict_from(payload(doc, "algdep", "dependence"));
    if (v.dependent()) {
      std::vector<TruncatedSeries> assignment;
      if (req.contains("series")) {
        assignment = series_list(req.at("series"));
      } else {
        assignment = series_list(field(req, "basis"));
        assignment.push_back(io::series_from(field(req, "target")));
      }
      const unsigned N = positive(req, "order");
      const auto a = verify_annihilator(*v.annihilator, assignment, N);
      const auto b = verify_annihilator(*v.annihilator, assignment, N + kReverifyMargin);
      ok = a.clean && b.clean;
      res = {{"at_order", io::to_json(a)}, {"at_margin", io::to_json(b)}};
    } else {
      const DependenceVerdict again = run_algdep(req);
      ok = again.outcome == v.outcome;
      res = {{"recomputed", outcome_name(again.outcome)}};
    }
    res["ok"] = ok;
    return {std::move(res), ok ? "VERIFIED" : "REJECTED", ok ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_FAIL};
  }
  const Annihilator a = io::annihilator_from(field(r, "annihilator"));
  const auto rep = verify_annihilator(a, series_list(field(r, "assignment")), positive(r, "order"));
  return {{{"residual", io::to_json(rep)}}, rep.describe(), rep.clean ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_FAIL};
}

Outcome cmd_verify_system(const Json& r) {
  const unsigned N = positive(r, "order");
  const Json& spec = field(r, "system");
  RationalAdditionSystem sys;
  if (const GroupDescriptor* d = catalog_ref(spec)) {
    auto s = d->system(N);
    if (!s) fail(ErrorCode::not_found, "catalog entry " + d->name + " has no companion system");
    sys = std::move(*s);
  } else {
    sys = io::system_from(spec);
  }
  const SystemReport rep = verify_rational_system(sys, N);
  return {{{"report", io::to_json(rep)}},
          rep.clean ? "CLEAN(" + std::to_string(N) + ")" : "RESIDUAL",
          rep.clean ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_FAIL};
}

Outcome cmd_iso_witness(const Json& r) {
  const unsigned d = positive(r, "degree");
  const unsigned N = positive(r, "order");
  const GermMap f = resolve_germ(field(r, "f"), N + kReverifyMargin);
  const GermMap g = resolve_germ(field(r, "g"), N + kReverifyMargin);
  const IsoWitness w = isomorphism_witness_check(f, g, io::matrix_from(field(r, "alpha")), d, N, options_of(r));
  return {{{"witness", io::to_json(w)}}, std::string(verdict_name(w.verdict)), tier_of(w.verdict)};
}

Outcome cmd_verify_iso(const Json& r) {
  const Json& doc = field(r, "certificate");
  const Json& req = request_of(doc, "iso-witness");
  const IsoWitness w = io::iso_from(payload(doc, "iso-witness", "witness"));
  const unsigned N = w.order;
  const GermMap f = resolve_germ(field(req, "f"), N + kReverifyMargin);
  const GermMap g = resolve_germ(field(req, "g"), N + kReverifyMargin);
  const GermMap h = compose_linear(g, w.alpha);
  bool ok = w.components.size() == f.dimension();
  std::string message;
  Json checks = Json::array();
  bool searched = false;
  bool all = ok;
  for (std::size_t i = 0; ok && i < w.components.size(); ++i) {
    const auto& v = w.components[i];
    all = all && v.dependent();
    if (!v.dependent()) {
      searched = true;
      checks.push_back(nullptr);
      continue;
    }
    std::vector<TruncatedSeries> assignment = f.components();
    assignment.push_back(h[i]);
    const auto a = verify_annihilator(*v.annihilator, assignment, N);
    const auto b = verify_annihilator(*v.annihilator, assignment, N + kReverifyMargin);
    checks.push_back({{"at_order", io::to_json(a)}, {"at_margin", io::to_json(b)}});
    if (!a.clean || !b.clean) {
      ok = false;
      message = "annihilator of component " + std::to_string(i + 1) + " leaves " + b.describe();
    }
  }
  if (ok && (w.verdict == Verdict::pass) != all) {
    ok = false;
    message = "verdict does not follow from the components";
  }
  if (ok && searched) {
    const IsoWitness again = isomorphism_witness_check(f, g, w.alpha, w.degree_bound, N, options_of(r));
    for (std::size_t i = 0; i < w.components.size(); ++i)
      if (again.components[i].outcome != w.components[i].outcome) {
        ok = false;
        message = "component " + std::to_string(i + 1) + " recomputes as " +
                  std::string(outcome_name(again.components[i].outcome));
      }
  }
  return {{{"ok", ok}, {"message", message}, {"checks", std::move(checks)}},
          ok ? "VERIFIED" : "REJECTED",
          ok ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_FAIL};
}

Outcome cmd_periods(const Json& r) {
  const std::string op = r.value("op", "analyze");
  const PeriodGroup g = resolve_group(field(r, "group"));
  if (op == "analyze") {
    Json res = io::to_json(g);
    res["conjugation_closed"] = conjugation_closed(g);
    return {{{"group", std::move(res)}}, g.is_lattice() ? "LATTICE" : g.is_discrete() ? "DISCRETE" : "NOT_DISCRETE",
            AATKIT_VERDICT_PASS};
  }
  if (op == "scale-into") {
    const PeriodGroup dst = resolve_group(field(r, "other"));
    const unsigned n_max = positive(r, "n_max");
    const auto n = smallest_scaling_into(g, dst, n_max);
    Json res{{"n", n ? Json(*n) : Json(nullptr)}, {"n_max", n_max}, {"assumption", g.table().assumption()}};
    if (n) return {std::move(res), "FOUND(" + std::to_string(*n) + ")", AATKIT_VERDICT_PASS};
    return {std::move(res), "NOT_FOUND(" + std::to_string(n_max) + ")", AATKIT_VERDICT_UNRESOLVED};
  }
  if (op == "index") {
    const IndexResult ix = sublattice_index(g, resolve_group(field(r, "other")));
    Json res = io::to_json(ix);
    res["assumption"] = g.table().assumption();
    return {{{"index", std::move(res)}}, ix.describe(),
            ix.kind == IndexResult::finite ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_UNRESOLVED};
  }
  if (op == "apply-alpha") {
    const PeriodGroup out = apply_gl(io::matrix_from(field(r, "alpha")), g);
    return {{{"group", io::to_json(out)}}, "ZRANK(" + std::to_string(out.zrank()) + ")", AATKIT_VERDICT_PASS};
  }
  if (op == "compare") {
    const RankComparison c = compare_rank_invariant(g, resolve_group(field(r, "other")));
    return {{{"equal", c.equal}, {"ranks", Json::array({c.rank_f, c.rank_g})}, {"assumption", g.table().assumption()}},
            c.equal ? "EQUAL" : "DIFFERENT",
            c.equal ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_FAIL};
  }
  fail(ErrorCode::invalid_input, "unknown periods operation '" + op + "'");
}

Outcome cmd_rank_report(const Json& r) {
  const Json& specs = field(r, "groups");
  if (!specs.is_array()) fail(ErrorCode::parse_error, "'groups' must be an array");
  std::vector<GroupDescriptor> own;
  own.reserve(specs.size());
  std::vector<const GroupDescriptor*> ptrs;
  for (const auto& s : specs) {
    if (const GroupDescriptor* d = catalog_ref(s)) {
      ptrs.push_back(d);
      continue;
    }
    GroupDescriptor d;
    d.name = field(s, "name").get<std::string>();
    d.periods = io::period_group_from(field(s, "group"));
    d.dimension = d.periods.dimension();
    own.push_back(std::move(d));
    ptrs.push_back(&own.back());
  }
  return {{{"report", io::to_json(rank_report(ptrs))}}, "TABULATED", AATKIT_VERDICT_PASS};
}

Outcome cmd_branch(const Json& r) {
  const BranchProblem p = io::branch_problem_from(field(r, "problem"));
  validate_problem(p);
  const auto cells = cell_partition(p);
  Json cj = Json::array();
  for (const auto& c : cells) cj.push_back(io::to_json(c));
  Json res{{"critical_polynomial", io::to_json(critical_polynomial(p.p))}, {"cells", std::move(cj)}};
  if (r.contains("isolate_at")) {
    const Rational x0 = io::rational_from(r.at("isolate_at"));
    Json iv = Json::array();
    for (const auto& i : isolate_roots(p.p, x0)) iv.push_back(io::to_json(i));
    res["isolate"] = {{"x0", rational_string(x0)}, {"intervals", std::move(iv)}};
  }
  std::optional<BranchHandle> handle;
  if (r.contains("identify")) {
    const Json& q = r.at("identify");
    handle = identify_branch(p, cells, io::rational_from(field(q, "x0")), io::rational_from(field(q, "y_lo")),
                             io::rational_from(field(q, "y_hi")));
    res["identify"] = io::to_json(*handle);
  }
  if (r.contains("evaluate")) {
    const Json& q = r.at("evaluate");
    if (q.contains("cell") || q.contains("branch")) handle = io::handle_from(q);
    if (!handle) fail(ErrorCode::invalid_input, "evaluate needs a branch handle or an identify sample");
    const RootInterval iv =
        evaluate_branch(p, cells, *handle, io::rational_from(field(q, "x")), io::rational_from(field(q, "width")));
    res["evaluate"] = {{"handle", io::to_json(*handle)}, {"interval", io::to_json(iv)}};
  }
  return {std::move(res), "CELLS(" + std::to_string(cells.size()) + ")", AATKIT_VERDICT_PASS};
}

Outcome cmd_period_check(const Json& r) {
  const Json& spec = field(r, "map");
  GroupDescriptor local;
  const GroupDescriptor* d = catalog_ref(spec);
  if (!d) {
    if (!spec.contains("odes")) fail(ErrorCode::parse_error, "map must be a catalog reference or carry 'odes'");
    for (const auto& o : spec.at("odes")) local.odes.push_back(io::ode_from(o));
    local.dimension = local.odes.size();
    local.name = spec.value("name", "custom");
    if (!r.contains("group")) fail(ErrorCode::parse_error, "a custom map needs a 'group'");
    d = &local;
  }
  std::optional<PeriodGroup> g;
  if (r.contains("group")) g = resolve_group(r.at("group"));
  const auto rep = numeric_period_check(*d, positive(r, "digits"), positive(r, "samples"), g);
  return {{{"report", io::to_json(rep)}}, std::string(verdict_name(rep.verdict)), tier_of(rep.verdict)};
}

Outcome cmd_catalog(const Json& r) {
  if (r.contains("name")) {
    const Json& n = r.at("name");
    const GroupDescriptor* d = catalog_ref(n.is_string() && n.get<std::string>().rfind("catalog:", 0) == 0
                                            ? n
                                            : Json("catalog:" + n.get<std::string>()));
    return {{{"entry", io::to_json(*d)}}, "FOUND", AATKIT_VERDICT_PASS};
  }
  Json entries = Json::array();
  for (const auto& d : builtin_catalog()) entries.push_back(io::to_json(d));
  return {{{"symbols", io::to_json(catalog_symbols())}, {"entries", std::move(entries)}},
          "ENTRIES(" + std::to_string(builtin_catalog().size()) + ")",
          AATKIT_VERDICT_PASS};
}

Outcome cmd_condition_star(const Json& r) {
  const ConditionStar s = check_condition_star(resolve_germ(field(r, "map"), uint_or(r, "order", 4)));
  return {{{"condition_star", io::to_json(s)}}, std::string(verdict_name(s.verdict)), tier_of(s.verdict)};
}

Outcome cmd_promote(const Json& r) {
  const Promotion p = promote_real_to_complex(resolve_germ(field(r, "map"), uint_or(r, "order", 4)));
  return {{{"promotion", io::to_json(p)}}, std::string(verdict_name(p.verdict)), tier_of(p.verdict)};
}

Outcome cmd_group_law(const Json& r) {
  const unsigned d = positive(r, "degree");
  const unsigned N = positive(r, "order");
  const GroupLawCheck g = group_law_check(resolve_germ(field(r, "map"), N + kReverifyMargin), d, N, options_of(r));
  return {{{"group_law", io::to_json(g)}}, std::string(verdict_name(g.verdict)), tier_of(g.verdict)};
}

Json run_document(const std::string& command, const Json& request, int* tier);

Outcome cmd_verify(const Json& r) {
  const Json& doc = field(r, "certificate");
  if (!doc.is_object() || !doc.contains("command") || !doc.contains("request"))
    fail(ErrorCode::invalid_input, "not a result document");
  int tier = 0;
  const Json again = run_document(field(doc, "command").get<std::string>(), field(doc, "request"), &tier);
  const bool same = io::dump(again) == io::dump(doc);
  return {{{"identical", same}, {"command", doc.at("command")}}, same ? "IDENTICAL" : "DIFFERENT",
          same ? AATKIT_VERDICT_PASS : AATKIT_VERDICT_FAIL};
}

const std::map<std::string, std::function<Outcome(const Json&)>>& commands() {
  static const std::map<std::string, std::function<Outcome(const Json&)>> table{
      {"aat-check", cmd_aat_check},
      {"verify-aat", cmd_verify_aat},
      {"algdep", cmd_algdep},
      {"verify-annihilator", cmd_verify_annihilator},
      {"verify-system", cmd_verify_system},
      {"iso-witness", cmd_iso_witness},
      {"verify-iso", cmd_verify_iso},
      {"periods", cmd_periods},
      {"rank-report", cmd_rank_report},
      {"branch", cmd_branch},
      {"period-check", cmd_period_check},
      {"catalog", cmd_catalog},
      {"condition-star", cmd_condition_star},
      {"promote", cmd_promote},
      {"group-law", cmd_group_law},
      {"verify", cmd_verify},
  };
  return table;
}

Json run_document(const std::string& command, const Json& request, int* tier) {
  const auto& t = commands();
  auto it = t.find(command);
  if (it == t.end()) fail(ErrorCode::invalid_input, "unknown command '" + command + "'");
  if (!request.is_object()) fail(ErrorCode::parse_error, "request must be a JSON object");
  Outcome o = it->second(request);
  *tier = o.tier;
  return {{"command", command}, {"request", request}, {"result", std::move(o.result)}, {"verdict", o.verdict}};
}

template <class F>
int guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return AATKIT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed document: ") + e.what();
    return AATKIT_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AATKIT_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AATKIT_INTERNAL;
  }
}

aatkit_result* make_result(const Json& doc, int tier) {
  auto* r = new aatkit_result;
  r->text = io::dump(doc);
  r->tier = tier;
  return r;
}

int run_into(const std::string& command, const Json& request, aatkit_result** out) {
  if (!out) {
    g_last_error = "null output pointer";
    return AATKIT_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    int tier = 0;
    const Json doc = run_document(command, request, &tier);
    *out = make_result(doc, tier);
  });
}

}  // namespace
}  // namespace aatkit

using namespace aatkit;

extern "C" {

const char* aatkit_version(void) { return "0.1.0"; }

const char* aatkit_status_name(int status) {
  switch (status) {
    case 0: return "OK";
    case 1: case 2: case 3: case 4: case 5: case 6: case 7: case 8: case 9: case 10: case 11: case 12: case 13:
    case 14: case 15: case 16: case 17: case 18: case 99: {
      static thread_local std::string s;
      s = std::string(error_code_name(static_cast<ErrorCode>(status)));
      return s.c_str();
    }
    default: return "UNKNOWN";
  }
}

const char* aatkit_last_error(void) { return g_last_error.c_str(); }

int aatkit_germ_from_json(const char* json, aatkit_germ** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return AATKIT_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] { *out = new aatkit_germ{io::germ_from(io::parse(json))}; });
}

int aatkit_germ_from_catalog(const char* name, unsigned order, aatkit_germ** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return AATKIT_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    std::string n = name;
    if (n.rfind("catalog:", 0) == 0) n = n.substr(8);
    *out = new aatkit_germ{catalog_entry(n).germ(order)};
  });
}

size_t aatkit_germ_dimension(const aatkit_germ* germ) { return germ ? germ->map.dimension() : 0; }

unsigned aatkit_germ_order(const aatkit_germ* germ) { return germ ? germ->map.order() : 0; }

int aatkit_germ_to_json(const aatkit_germ* germ, aatkit_result** out) {
  if (!germ || !out) {
    g_last_error = "null argument";
    return AATKIT_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] { *out = make_result(io::to_json(germ->map), AATKIT_VERDICT_PASS); });
}

void aatkit_germ_free(aatkit_germ* germ) { delete germ; }

int aatkit_aat_check(const aatkit_germ* germ, unsigned degree, unsigned order, size_t max_monomials,
                     aatkit_result** out) {
  if (!germ) {
    g_last_error = "null germ";
    return AATKIT_INVALID_INPUT;
  }
  io::Json req{{"map", io::to_json(germ->map)}, {"degree", degree}, {"order", order}};
  if (max_monomials) req["max_monomials"] = max_monomials;
  return run_into("aat-check", req, out);
}

int aatkit_iso_witness(const aatkit_germ* f, const aatkit_germ* g, const char* alpha_json, unsigned degree,
                       unsigned order, size_t max_monomials, aatkit_result** out) {
  if (!f || !g || !alpha_json) {
    g_last_error = "null argument";
    return AATKIT_INVALID_INPUT;
  }
  io::Json req;
  const int st = guarded([&] {
    req = {{"f", io::to_json(f->map)},
           {"g", io::to_json(g->map)},
           {"alpha", io::parse(alpha_json)},
           {"degree", degree},
           {"order", order}};
    if (max_monomials) req["max_monomials"] = max_monomials;
  });
  if (st != AATKIT_OK) return st;
  return run_into("iso-witness", req, out);
}

int aatkit_run(const char* command, const char* request_json, aatkit_result** out) {
  if (!command || !request_json) {
    g_last_error = "null argument";
    return AATKIT_INVALID_INPUT;
  }
  io::Json req;
  const int st = guarded([&] { req = io::parse(request_json); });
  if (st != AATKIT_OK) return st;
  return run_into(command, req, out);
}

const char* aatkit_result_json(const aatkit_result* result) { return result ? result->text.c_str() : ""; }

int aatkit_result_verdict(const aatkit_result* result) { return result ? result->tier : AATKIT_VERDICT_UNRESOLVED; }

void aatkit_result_free(aatkit_result* result) { delete result; }

}  // extern "C"
