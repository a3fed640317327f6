#include "support.hpp"

#include "aatkit/aat.hpp"

using namespace aatkit;
using namespace aatkit::test;

namespace {

Polynomial over(const Annihilator& a, const std::string& text) { return parse_polynomial(text, a.names); }

}  // namespace

TEST_SUITE("aat") {
  TEST_CASE("exp: z - x1*x2") {
    const auto cert = check_aat(catalog_entry("exp").germ(18), 2, 10);
    CHECK(cert.status == Verdict::pass);
    REQUIRE(cert.components.size() == 1);
    const auto& a = *cert.components[0].annihilator;
    CHECK(a.names == std::vector<std::string>{"x1", "x2", "z"});
    CHECK(a.poly == over(a, "z - x1*x2"));
    CHECK(a.residual.describe() == "CLEAN(18)");
    CHECK(recheck_aat(cert).ok);
  }

  TEST_CASE("sin at d=6, N=16") {
    const auto cert = check_aat(catalog_entry("sin").germ(24), 6, 16);
    REQUIRE(cert.status == Verdict::pass);
    const auto& a = *cert.components[0].annihilator;
    const auto oracle = over(a, "(z^2 + x1^2 - x2^2)^2 - 4*z^2*x1^2*(1 - x2^2)");
    CHECK(divide_exact(oracle, a.poly).has_value());
    CHECK(recheck_aat(cert).ok);
  }

  TEST_CASE("identity germ: z - x1 - x2") {
    const auto cert = check_aat(catalog_entry("identity").germ(12), 2, 4);
    REQUIRE(cert.status == Verdict::pass);
    const auto& a = *cert.components[0].annihilator;
    CHECK(a.poly == over(a, "z - x1 - x2"));
  }

  TEST_CASE("product germ searches per factor and states the full basis") {
    const auto cert = check_aat(catalog_entry("exp_x_sin").germ(24), 6, 16);
    REQUIRE(cert.status == Verdict::pass);
    REQUIRE(cert.components.size() == 2);
    const auto& e = *cert.components[0].annihilator;
    CHECK(e.names == std::vector<std::string>{"x1", "x2", "x3", "x4", "z"});
    CHECK(e.poly == over(e, "z - x1*x3"));
    CHECK(recheck_aat(cert).ok);
  }

  TEST_CASE("weierstrass at d=10, N=24 has no confirmed annihilator") {
    const auto cert = check_aat(catalog_entry("weierstrass_g2_0_g3_m4").germ(32), 10, 24);
    CHECK(cert.status != Verdict::pass);
    CHECK(cert.components[0].outcome == DependenceOutcome::unconfirmed);
  }

  TEST_CASE("germ order must cover the re-check margin") {
    CHECK(error_of([] { check_aat(catalog_entry("sin").germ(20), 6, 16); }) == ErrorCode::order_exceeded);
  }

  TEST_CASE("a tampered certificate is rejected") {
    auto cert = check_aat(catalog_entry("exp").germ(18), 2, 10);
    auto& a = *cert.components[0].annihilator;
    a.poly = over(a, "z - x1*x2 + x1^2");
    const auto re = recheck_aat(cert);
    CHECK_FALSE(re.ok);
    CHECK_FALSE(re.at_order[0].clean);
  }

  TEST_CASE("condition star and promotion") {
    const auto s = check_condition_star(catalog_entry("exp_x_sin").germ(4));
    CHECK(s.verdict == Verdict::pass);
    CHECK(s.det == ExactScalar(1));
    const auto sq = TruncatedSeries::univariate(5, std::vector<ExactScalar>{0, 0, 1});
    CHECK(check_condition_star(GermMap({sq}, Field::rat, "u^2")).verdict == Verdict::fail);
    const auto p = promote_real_to_complex(catalog_entry("sin").germ(4));
    CHECK(p.verdict == Verdict::pass);
    CHECK(p.conjugation_fixed);
    const auto gi = compose_linear(catalog_entry("exp").germ(4), {{ExactScalar::i()}});
    CHECK_FALSE(promote_real_to_complex(gi).conjugation_fixed);
  }

  TEST_CASE("group law of exp") {
    const auto g = group_law(catalog_entry("exp").germ(8));
    REQUIRE(g.size() == 1);
    const std::vector<std::string> n{"a1", "b1"};
    CHECK(parse_polynomial("a1 + b1 + a1*b1", n).substitute(std::vector<TruncatedSeries>{
              TruncatedSeries::variable(2, 8, 0), TruncatedSeries::variable(2, 8, 1)}) == g[0]);
    const auto c = group_law_check(catalog_entry("sin").germ(24), 6, 16);
    CHECK(c.verdict == Verdict::pass);
  }
  TEST_CASE("promotion survives rational linear changes of variables") {
    const std::vector<ScalarMatrix> one{{{ExactScalar(2)}}, {{ExactScalar(Rational(-3, 5))}}};
    const std::vector<ScalarMatrix> two{{{ExactScalar(1), ExactScalar(2)}, {ExactScalar(3), ExactScalar(Rational(1, 2))}},
                                        {{ExactScalar(0), ExactScalar(-1)}, {ExactScalar(1), ExactScalar(0)}}};
    for (const auto& d : builtin_catalog()) {
      if (d.field != Field::rat) continue;
      const auto g = d.germ(6);
      REQUIRE(promote_real_to_complex(g).verdict == Verdict::pass);
      for (const auto& a : d.dimension == 1 ? one : two)
        CHECK_MESSAGE(promote_real_to_complex(compose_linear(g, a)).verdict == Verdict::pass, d.name);
    }
  }
}

TEST_SUITE("system") {
  TEST_CASE("sin/cos system is clean and a sign flip shows at first order") {
    auto sys = *catalog_entry("sin").system(20);
    const auto rep = verify_rational_system(sys, 20);
    CHECK(rep.clean);
    CHECK(rep.checks.size() == 5);
    // sin(u+v) = x1*y0 + x0*y1  ->  x1*y0 - x0*y1
    for (auto& [idx, rf] : sys.addition) {
      if (idx != 1) continue;
      Polynomial flipped(rf.num.vars());
      for (const auto& [m, c] : rf.num.terms()) flipped.add_term(m, m[0] == 1 ? -c : c);
      rf.num = flipped;
    }
    const auto bad = verify_rational_system(sys, 20);
    CHECK_FALSE(bad.clean);
    bool first_order = false;
    for (const auto& ch : bad.checks)
      if (!ch.residual.clean && ch.kind == "addition")
        first_order = ch.residual.residual && ch.residual.residual->index.total_degree() == 1;
    CHECK(first_order);
  }

  TEST_CASE("a broken relation is reported") {
    auto sys = *catalog_entry("sin").system(12);
    sys.relation = parse_polynomial("x0^2 + x1^2 - 2", std::vector<std::string>{"x0", "x1"});
    const auto rep = verify_rational_system(sys, 12);
    CHECK_FALSE(rep.clean);
  }

  TEST_CASE("exp and weierstrass systems are clean") {
    CHECK(verify_rational_system(*catalog_entry("exp").system(16), 16).clean);
    CHECK(verify_rational_system(*catalog_entry("weierstrass_g2_0_g3_m4").system(12), 12).clean);
  }

  TEST_CASE("a denominator vanishing at the base point is refused") {
    auto sys = *catalog_entry("exp").system(8);
    sys.addition[0].second.den = parse_polynomial("x1 - y1", std::vector<std::string>{"x0", "x1", "y0", "y1"});
    CHECK(error_of([&] { verify_rational_system(sys, 8); }) == ErrorCode::denominator_not_unit);
  }
  TEST_CASE("a clean system yields annihilators z*den - num") {
    for (const char* name : {"exp", "sin", "weierstrass_g2_0_g3_m4"}) {
      const auto sys = *catalog_entry(name).system(20);
      REQUIRE(verify_rational_system(sys, 12).clean);
      const std::size_t m = sys.psi.size();
      std::vector<std::string> xy, names;
      for (std::size_t i = 0; i < m; ++i) xy.push_back("x" + std::to_string(i));
      for (std::size_t i = 0; i < m; ++i) xy.push_back("y" + std::to_string(i));
      names = xy;
      names.push_back("z");
      std::vector<std::size_t> u(sys.psi[0].vars()), v(sys.psi[0].vars());
      for (std::size_t k = 0; k < u.size(); ++k) {
        u[k] = k;
        v[k] = k + u.size();
      }
      std::vector<TruncatedSeries> assignment;
      for (const auto& p : sys.psi) assignment.push_back(p.embedded(2 * u.size(), u));
      for (const auto& p : sys.psi) assignment.push_back(p.embedded(2 * u.size(), v));
      for (const auto& [idx, rf] : sys.addition) {
        Annihilator a;
        a.names = names;
        a.poly = parse_polynomial("z*(" + rf.den.to_string(xy) + ") - (" + rf.num.to_string(xy) + ")", names);
        a.degree = a.poly.total_degree();
        a.has_target = true;
        auto full = assignment;
        full.push_back(block_sum_substitute(sys.psi[idx], 20));
        CHECK_MESSAGE(verify_annihilator(a, full, 12).clean, name);
      }
    }
  }
}

TEST_SUITE("iso") {
  TEST_CASE("sin with alpha = 2") {
    const auto w = isomorphism_witness_check(catalog_entry("sin").germ(24), catalog_entry("sin").germ(24),
                                             {{ExactScalar(2)}}, 6, 16);
    REQUIRE(w.verdict == Verdict::pass);
    const auto& a = *w.components[0].annihilator;
    CHECK(a.poly == parse_polynomial("z^2 - 4*x1^2*(1 - x1^2)", a.names));
  }

  TEST_CASE("sin against exp stays unresolved") {
    const auto w = isomorphism_witness_check(catalog_entry("sin").germ(28), catalog_entry("exp").germ(28),
                                             {{ExactScalar(1)}}, 6, 20);
    CHECK(w.verdict == Verdict::unresolved);
    CHECK(w.components[0].kernel_dimension == 8);
  }

  TEST_CASE("singular alpha") {
    CHECK(error_of([] {
            isomorphism_witness_check(catalog_entry("sin").germ(24), catalog_entry("sin").germ(24), {{ExactScalar(0)}},
                                      6, 16);
          }) == ErrorCode::singular_alpha);
  }
  TEST_CASE("every certified catalog germ is a witness for itself") {
    for (const auto& d : builtin_catalog()) {
      const ScalarMatrix id = identity_matrix(d.dimension);
      const auto w = isomorphism_witness_check(d.germ(16), d.germ(16), id, 2, 8);
      CHECK_MESSAGE(w.verdict == Verdict::pass, d.name);
    }
  }
}
