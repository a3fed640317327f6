// Acceptance run: one PASS/FAIL line per criterion.
// usage: aatkit_acceptance <aatkit cli> <scratch dir> [criterion numbers...]

#include "aatkit/aat.hpp"
#include "aatkit/branchres.hpp"
#include "aatkit/catalog.hpp"
#include "aatkit/error.hpp"
#include "aatkit/lattice.hpp"

#include <gmpxx.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace aatkit;

namespace {

std::string g_cli;
std::filesystem::path g_work;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "" : "NOT ") + what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

int cli(const std::string& args) {
  const std::string cmd = "'" + g_cli + "' " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string path(const std::string& name) { return (g_work / name).string(); }

Polynomial parse(const std::string& text, const std::vector<std::string>& names) { return parse_polynomial(text, names); }

// ---------------------------------------------------------------------------

Outcome aat_certificates() {
  Outcome o;
  struct Case {
    const char* name;
    unsigned d, N;
    double limit;
  };
  for (const Case& c : {Case{"exp", 2, 10, 1.0}, Case{"sin", 6, 16, 10.0},
                        Case{"weierstrass_g2_0_g3_m4", 10, 24, 120.0}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = check_aat(catalog_entry(c.name).germ(c.N + kReverifyMargin), c.d, c.N);
    const double dt = seconds_since(t0);
    const std::string tag = std::string(c.name) + " d=" + std::to_string(c.d) + " N=" + std::to_string(c.N);
    std::string outcome = std::string(verdict_name(cert.status));
    if (cert.status != Verdict::pass && !cert.components.empty())
      outcome += " (" + std::string(outcome_name(cert.components[0].outcome)) + ")";
    o.require(cert.status == Verdict::pass, tag + " PASS [" + outcome + ", " + fixed(dt) + "s]");
    o.require(dt < c.limit, tag + " under " + fixed(c.limit) + "s");
    for (const auto& v : cert.components)
      if (v.annihilator)
        o.require(v.annihilator->residual.clean && v.annihilator->residual.order == c.N + kReverifyMargin,
                  tag + " re-verifies " + v.annihilator->residual.describe());
    if (std::string(c.name) == "exp" && cert.status == Verdict::pass) {
      const auto& a = *cert.components[0].annihilator;
      o.require(a.poly == parse("z - x1*x2", a.names), "exp annihilator is z - x1*x2");
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const std::vector<std::string> names{"x1", "x2", "z"};
  const auto oracle = parse("(z^2 + x1^2 - x2^2)^2 - 4*z^2*x1^2*(1 - x2^2)", names);
  const auto germ = catalog_entry("sin").germ(24);
  const std::size_t u[] = {0}, v[] = {1};
  const std::vector<TruncatedSeries> assignment{germ[0].embedded(2, u), germ[0].embedded(2, v),
                                                block_sum_substitute(germ[0], 24)};
  Annihilator hand;
  hand.names = names;
  hand.poly = oracle;
  hand.degree = oracle.total_degree();
  hand.has_target = true;
  const auto r = verify_annihilator(hand, assignment, 16);
  o.require(r.clean && r.describe() == "CLEAN(16)", "hand-derived relation " + r.describe());
  const auto cert = check_aat(germ, 6, 16);
  if (cert.status == Verdict::pass) {
    const auto& found = cert.components[0].annihilator->poly;
    const auto q = divide_exact(oracle, found);
    o.require(q.has_value(), "engine annihilator divides the hand-derived one");
    if (q) o.require(true, "quotient " + q->to_string(names));
  } else {
    o.require(false, "engine found an annihilator");
  }
  return o;
}

Outcome rational_system() {
  Outcome o;
  auto sys = *catalog_entry("sin").system(20);
  const auto rep = verify_rational_system(sys, 20);
  o.require(rep.clean, rep.clean ? "(cos, sin) system CLEAN(20)" : "(cos, sin) system clean");
  for (auto& [idx, rf] : sys.addition) {
    if (idx != 1) continue;
    Polynomial flipped(rf.num.vars());
    bool done = false;
    for (const auto& [m, c] : rf.num.terms()) {
      flipped.add_term(m, done ? c : -c);
      done = true;
    }
    rf.num = flipped;
  }
  const auto bad = verify_rational_system(sys, 20);
  bool first_order = false;
  for (const auto& ch : bad.checks)
    if (ch.kind == "addition" && ch.index == 1 && !ch.residual.clean && ch.residual.residual)
      first_order = ch.residual.residual->index.total_degree() == 1;
  o.require(!bad.clean && first_order, "sign flip fails at the first-order coefficient");
  return o;
}

ScalarMatrix random_gl(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  for (;;) {
    ScalarMatrix a(n, std::vector<ExactScalar>(n));
    for (auto& row : a)
      for (auto& x : row) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        x = ExactScalar(q);
      }
    if (!determinant(a).is_zero()) return a;
  }
}

Outcome rank_invariant() {
  Outcome o;
  std::vector<const GroupDescriptor*> one_dim;
  std::set<std::size_t> ranks;
  for (const auto& d : builtin_catalog())
    if (d.dimension == 1) {
      one_dim.push_back(&d);
      ranks.insert(d.periods.zrank());
    }
  o.require(ranks == std::set<std::size_t>{0, 1, 2}, "one-dimensional ranks are {0, 1, 2}");
  const auto rep = rank_report({&catalog_entry("identity"), &catalog_entry("sin"), &catalog_entry("weierstrass_g2_0_g3_m4")});
  bool all_different = rep.pairs.size() == 3;
  for (const auto& p : rep.pairs) all_different = all_different && !p.comparison.equal;
  o.require(all_different && rep.rows[0].rank == 0 && rep.rows[1].rank == 1 && rep.rows[2].rank == 2,
            "identity/sin/weierstrass ranks 0/1/2 pairwise DIFFERENT");
  bool consistent = true;
  for (std::size_t i = 0; i < one_dim.size(); ++i)
    for (std::size_t j = i + 1; j < one_dim.size(); ++j) {
      const auto c = compare_rank_invariant(one_dim[i]->periods, one_dim[j]->periods);
      consistent = consistent && c.equal == (one_dim[i]->periods.zrank() == one_dim[j]->periods.zrank());
    }
  o.require(consistent, "DIFFERENT exactly when ranks differ");
  std::mt19937_64 rng(0x5eed5eed);
  bool invariant = true;
  int actions = 0;
  for (const auto* d : one_dim)
    for (int k = 0; k < 100; ++k, ++actions) invariant = invariant && apply_gl(random_gl(rng, 1), d->periods).zrank() == d->periods.zrank();
  for (const auto& d : builtin_catalog())
    if (d.dimension == 2)
      for (int k = 0; k < 100; ++k, ++actions) invariant = invariant && apply_gl(random_gl(rng, 2), d.periods).zrank() == d.periods.zrank();
  o.require(invariant, "zrank invariant under " + std::to_string(actions) + " random GL1/GL2 actions");
  return o;
}

Outcome periods_algebraicity() {
  Outcome o;
  const auto& t = catalog_symbols();
  auto pi_group = [&](long k) {
    PeriodVector v(1);
    v.add(0, 1 + *t.index_of("pi"), ExactScalar(k));
    return PeriodGroup(t, 1, {v});
  };
  const auto n = smallest_scaling_into(pi_group(1), pi_group(2), 100);
  o.require(n && *n == 2, "smallest N for Z pi into Z 2pi is 2");
  const auto ix = sublattice_index(pi_group(2), pi_group(1));
  o.require(ix.kind == IndexResult::finite && ix.index == 2, "index [Z pi : Z 2pi] = " + ix.describe());

  const std::vector<ExactScalar> alphas{ExactScalar(1), ExactScalar(2), ExactScalar::i()};
  int witnessed = 0;
  bool monotone = true;
  for (const auto& f : builtin_catalog()) {
    if (f.dimension != 1) continue;
    for (const auto& g : builtin_catalog()) {
      if (g.dimension != 1) continue;
      for (const auto& a : alphas) {
        const auto w = isomorphism_witness_check(f.germ(24), g.germ(24), {{a}}, 6, 16);
        if (w.verdict != Verdict::pass) continue;
        ++witnessed;
        if (f.periods.zrank() > g.periods.zrank()) {
          monotone = false;
          o.notes.push_back("violation: " + f.name + " -> " + g.name);
        }
      }
    }
  }
  o.require(monotone && witnessed > 0,
            "rank f <= rank g on all " + std::to_string(witnessed) + " witnessed catalog pairs");
  return o;
}

Outcome discreteness() {
  Outcome o;
  const SymbolTable t({{"sigma", std::nullopt}});
  PeriodVector one(1), sigma(1);
  one.add(0, 0, 1);
  sigma.add(0, 1, 1);
  const PeriodGroup g(t, 1, {one, sigma});
  o.require(!g.is_discrete() && g.zrank() == 2 && g.rdim() == 1, "{1, sigma} NOT discrete (zrank 2, rdim 1)");
  const auto& wp = catalog_entry("weierstrass_g2_0_g3_m4").periods;
  o.require(wp.is_lattice(), "{omega_1, omega_2} is a lattice in C^1");
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> e(-4, 4);
  bool stable = true;
  int rewrites = 0;
  for (const auto* base : {&g, &wp}) {
    const auto& gens = base->generators();
    while (rewrites < 40 * (base == &wp ? 2 : 1)) {
      const long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
      if (a * d - b * c != 1 && a * d - b * c != -1) continue;
      auto combo = [&](long x, long y) {
        PeriodVector r(1);
        const auto gx = gens[0] * ExactScalar(x), gy = gens[1] * ExactScalar(y);
        for (const auto* part : {&gx, &gy})
          for (const auto& [slot, v] : part->coords()[0]) r.add(0, slot, v);
        return r;
      };
      const PeriodGroup h(base->table(), 1, {combo(a, b), combo(c, d)});
      stable = stable && h.zrank() == base->zrank() && h.rdim() == base->rdim() &&
               h.is_discrete() == base->is_discrete() && h.is_lattice() == base->is_lattice();
      if (base->is_discrete()) stable = stable && sublattice_index(h, *base).index == 1;
      ++rewrites;
    }
  }
  o.require(stable, "verdicts stable under " + std::to_string(rewrites) + " unimodular generator rewrites");
  return o;
}

Outcome branch_resolver() {
  Outcome o;
  const BranchProblem p{parse("y^2 - x", {"x", "y"}), Rational(-1), Rational(4)};
  const auto cells = cell_partition(p);
  std::vector<std::size_t> counts;
  std::set<std::size_t> distinct;
  for (const auto& c : cells) {
    counts.push_back(c.count);
    distinct.insert(c.count);
  }
  o.require(distinct == std::set<std::size_t>{0, 1, 2} && counts == std::vector<std::size_t>{0, 0, 1, 2, 2},
            "cell counts (0, 1, 2)");
  const auto h = identify_branch(p, cells, Rational(1), Rational(9, 10), Rational(11, 10));
  o.require(h.branch == 2, "identify_branch(1, [0.9, 1.1]) gives j=" + std::to_string(h.branch));
  const Rational width("1/10000000000");
  const auto iv = evaluate_branch(p, cells, h, Rational(2), width);
  // mpmath sqrt(2), 50 digits
  const mpf_class ref("1.4142135623730950488016887242096980785696718753769", 256), tol("1e-10", 256);
  const mpf_class lo(iv.lo, 256), hi(iv.hi, 256);
  o.require(iv.width() <= width && lo <= ref && ref <= hi && abs(hi - ref) < tol && abs(ref - lo) < tol,
            "evaluate_branch(j=2, x=2) encloses sqrt 2 within 1e-10");

  std::mt19937_64 rng(0x5eed5eed);
  std::uniform_int_distribution<long> pick(-99999, 399999);
  std::vector<Rational> xs;
  for (int i = 0; i < 1000; ++i) {
    Rational x(pick(rng), 100000);
    x.canonicalize();
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  bool steady = true;
  int visited = 0;
  for (const auto& x : xs) {
    std::size_t cell = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].kind != Cell1D::open_interval) continue;
      auto l = cells[i].left, r = cells[i].right;
      if (compare(x, l) > 0 && compare(x, r) < 0) cell = i;
    }
    if (cell == cells.size()) continue;
    ++visited;
    Rational prev_hi;
    for (std::size_t j = 1; j <= cells[cell].count; ++j) {
      const auto b = evaluate_branch(p, cells, {cell, j}, x, Rational(1, 1000000));
      if (j > 1) steady = steady && prev_hi < b.lo;
      prev_hi = b.hi;
      const auto back = identify_branch(p, cells, x, b.lo - Rational(1, 10000000), b.hi + Rational(1, 10000000));
      steady = steady && back.cell == cell && back.branch == j;
    }
  }
  o.require(steady && visited > 900, std::to_string(visited) + "-sample sweep has no branch-index jumps");
  return o;
}

Outcome numeric_periods() {
  Outcome o;
  const auto sin = numeric_period_check(catalog_entry("sin"), 50, 20);
  const mpf_class maxr(sin.max_residual, 256), bound("1e-25", 256);
  o.require(sin.verdict == Verdict::pass && maxr < bound && sin.samples == 20,
            "sin, lambda = 2 pi, 50 digits: max residual " + sin.max_residual + " < 1e-25");
  PeriodVector one(1);
  one.add(0, 0, 1);
  const auto bogus = numeric_period_check(catalog_entry("exp"), 50, 20, PeriodGroup(catalog_symbols(), 1, {one}));
  o.require(bogus.verdict == Verdict::fail, "exp with period 1 " + std::string(verdict_name(bogus.verdict)));
  return o;
}

Outcome iso_witness() {
  Outcome o;
  const auto w = isomorphism_witness_check(catalog_entry("sin").germ(24), catalog_entry("sin").germ(24),
                                           {{ExactScalar(2)}}, 6, 16);
  bool shape = false;
  if (w.verdict == Verdict::pass) {
    const auto& a = *w.components[0].annihilator;
    shape = a.poly == parse("z^2 - 4*x1^2*(1 - x1^2)", a.names);
  }
  o.require(w.verdict == Verdict::pass && shape, "(sin, sin, 2) PASS with z^2 - 4x^2(1 - x^2)");
  const auto u = isomorphism_witness_check(catalog_entry("sin").germ(28), catalog_entry("exp").germ(28),
                                           {{ExactScalar(1)}}, 6, 20);
  o.require(u.verdict == Verdict::unresolved, "(sin, exp, 1) UNRESOLVED at d=6, N=20");
  // exact-fraction nullspace oracle: 28 unknowns, kernel 8 at N=20 and 0 at N=28
  const auto& c = u.components[0];
  o.require(c.unknowns == 28 && c.kernel_dimension == 8, "kernel dimension 8 at N=20 matches the oracle");
  o.require(c.outcome == DependenceOutcome::unconfirmed, "candidate rejected at N+8, where the oracle kernel is 0");
  const int code = cli("iso-witness --f catalog:sin --g catalog:exp --alpha '[1]' --degree 6 --order 20");
  o.require(code == 2, "CLI exit code " + std::to_string(code));
  return o;
}

Outcome determinism() {
  Outcome o;
  std::ofstream(path("pi.json")) << R"({"symbols": [{"name": "pi"}], "dimension": 1, "generators": [[{"pi": "1"}]]})";
  std::ofstream(path("two_pi.json")) << R"({"symbols": [{"name": "pi"}], "dimension": 1, "generators": [[{"pi": "2"}]]})";
  std::ofstream(path("parabola.json")) << R"({"poly": "y^2 - x", "a": "-1", "b": "4"})";
  std::ofstream(path("square.json")) << R"({"target": {"vars": 1, "order": 12, "terms": [[[2], "1"]]},
    "basis": [{"vars": 1, "order": 12, "terms": [[[1], "1"]]}]})";
  struct Job {
    std::string name, args, verify;
  };
  const std::vector<Job> jobs{
      {"exp", "aat-check --map catalog:exp --degree 2 --order 10", "verify-aat"},
      {"sin", "aat-check --map catalog:sin --degree 6 --order 16", "verify-aat"},
      {"wp", "aat-check --map catalog:weierstrass_g2_0_g3_m4 --degree 12 --order 56", "verify-aat"},
      {"wp10", "aat-check --map catalog:weierstrass_g2_0_g3_m4 --degree 10 --order 24", "verify-aat"},
      {"exp_x_sin", "aat-check --map catalog:exp_x_sin --degree 6 --order 16", "verify-aat"},
      {"iso2", "iso-witness --f catalog:sin --g catalog:sin --alpha '[2]' --degree 6 --order 16", "verify-iso"},
      {"iso1", "iso-witness --f catalog:sin --g catalog:exp --alpha '[1]' --degree 6 --order 20", "verify-iso"},
      {"alg", "algdep --input " + path("square.json") + " --degree 2 --order 4", "verify-annihilator"},
      {"sys", "verify-system --system catalog:sin --order 20", "verify"},
      {"ranks", "rank-report --groups catalog:identity,catalog:sin,catalog:weierstrass_g2_0_g3_m4", "verify"},
      {"scale", "periods --group " + path("pi.json") + " --op scale-into --other " + path("two_pi.json") + " --n-max 10",
       "verify"},
      {"branch", "branch --problem " + path("parabola.json") + " --identify 1,9/10,11/10 --evaluate 2 --width 1/10000000000",
       "verify"},
      {"pcheck", "period-check --map catalog:sin --digits 50 --samples 20", "verify"},
      {"catalog", "catalog", "verify"},
  };
  int identical = 0, verified = 0;
  for (const auto& j : jobs) {
    const std::string a = path(j.name + ".1.json"), b = path(j.name + ".2.json");
    cli(j.args + " --out " + a);
    cli(j.args + " --out " + b);
    const bool same = std::filesystem::exists(a) && slurp(a) == slurp(b) && !slurp(a).empty();
    identical += same;
    if (!same) o.notes.push_back("NOT byte-identical: " + j.name);
    const int code = cli(j.verify + " " + a);
    verified += code == 0;
    if (code != 0) o.notes.push_back("NOT re-verified: " + j.name + " (exit " + std::to_string(code) + ")");
  }
  const int n = static_cast<int>(jobs.size());
  o.require(identical == n, std::to_string(identical) + "/" + std::to_string(n) + " certificates byte-identical");
  o.require(verified == n, std::to_string(verified) + "/" + std::to_string(n) + " re-verify with exit 0");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: aatkit_acceptance <aatkit cli> <scratch dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_work = argv[2];
  std::filesystem::create_directories(g_work);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AAT certificates", aat_certificates},
      {"oracle equivalence", oracle_equivalence},
      {"rational addition system", rational_system},
      {"rank invariant", rank_invariant},
      {"algebraicity of periods", periods_algebraicity},
      {"discreteness criterion", discreteness},
      {"branch resolver", branch_resolver},
      {"numeric period cross-check", numeric_periods},
      {"isomorphism witness", iso_witness},
      {"determinism and round trip", determinism},
  };
  std::set<std::size_t> only;
  for (int k = 3; k < argc; ++k) only.insert(std::stoul(argv[k]));
  int failed = 0, ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    ++ran;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("error: ") + e.what());
    }
    failed += !o.ok;
    std::cout << "criterion " << (i + 1) << " " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first;
    std::string sep = ": ";
    for (const auto& n : o.notes) {
      std::cout << sep << n;
      sep = "; ";
    }
    std::cout << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
