#include "support.hpp"

using namespace aatkit;
using namespace aatkit::test;

namespace {

// mpmath, 50 digits
const char* kSinHalf = "0.4794255386042030002732879352155713880818033679406";
const char* kExpThird = "1.3956124250860895286281253196025868375979065151994";
const char* kTanQuarter = "0.25534192122103626650448223649047367820420163880082";
const char* kSinZRe = "0.25517568453718711081793018583881340719352352746848";
const char* kSinZIm = "0.2447592116325389731469553878186193677697729263035";
// mpmath odefun on y'' = 6 y^2, y(0) = 0, y'(0) = 2
const char* kWpHalf = "1.134520673869971117899524344061625621953";
const char* kWpPrimeHalf = "3.137058314720403030216792439117975277098";
const char* kWpOne = "6.178625748306540580526862255325882768393";
const char* kWpPrimeOne = "30.78126762174152351271370342678562678346";
// 2 pi / agm(2 sqrt(sqrt 3), sqrt(2 sqrt 3 - 3)), cross-checked by quadrature
const char* kOmegaR = "4.2065463159763627835250572371508824063890666162719582885459819612288542979454098882";
const char* kOmegaI = "3.6429759718313724177299125346713968728325522673123639116249441282081085310426537617";

std::string decimal_of(const std::string& name) { return *catalog_symbols().symbols()[*catalog_symbols().index_of(name)].decimal; }

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("manifest") {
    std::vector<std::string> names;
    for (const auto& d : builtin_catalog()) {
      names.push_back(d.name);
      CHECK(d.periods.is_discrete());
      CHECK(d.dimension == d.odes.size());
    }
    CHECK(names == std::vector<std::string>{"identity", "exp", "sin", "weierstrass_g2_0_g3_m4", "exp_x_sin",
                                            "sin_x_weierstrass"});
    CHECK(error_of([] { catalog_entry("cosh"); }) == ErrorCode::not_found);
    CHECK_FALSE(catalog_entry("exp_x_sin").system(8).has_value());
  }

  TEST_CASE("symbol approximations agree with the reference values") {
    CHECK(decimal_close(decimal_of("omega_r"), kOmegaR, 78));
    CHECK(decimal_close(decimal_of("omega_i"), kOmegaI, 78));
    CHECK(decimal_close(decimal_of("pi"), "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803", 78));
  }

  TEST_CASE("numeric values") {
    CHECK(decimal_close(numeric_value(kind(OdeKind::sin), ExactScalar(Rational(1, 2)), 45).re, kSinHalf, 43));
    CHECK(decimal_close(numeric_value(kind(OdeKind::exp), ExactScalar(Rational(1, 3)), 45).re, kExpThird, 43));
    CHECK(decimal_close(numeric_value(kind(OdeKind::tan), ExactScalar(Rational(1, 4)), 45).re, kTanQuarter, 43));
    const auto z = numeric_value(kind(OdeKind::sin), ExactScalar(Rational(1, 4), Rational(1, 4)), 45);
    CHECK(decimal_close(z.re, kSinZRe, 43));
    CHECK(decimal_close(z.im, kSinZIm, 43));
  }

  TEST_CASE("weierstrass values along the real axis") {
    const auto p = weierstrass_spec();
    auto dp = p;
    dp.kind = OdeKind::weierstrass_p_prime;
    CHECK(decimal_close(numeric_value(p, ExactScalar(Rational(1, 2)), 40).re, kWpHalf, 37));
    CHECK(decimal_close(numeric_value(dp, ExactScalar(Rational(1, 2)), 40).re, kWpPrimeHalf, 37));
    CHECK(decimal_close(numeric_value(p, ExactScalar(1), 40).re, kWpOne, 36));
    CHECK(decimal_close(numeric_value(dp, ExactScalar(1), 40).re, kWpPrimeOne, 35));
  }

  TEST_CASE("period checks") {
    const auto sin = numeric_period_check(catalog_entry("sin"), 50, 20);
    CHECK(sin.verdict == Verdict::pass);
    CHECK(sin.tolerance == "1e-25");
    CHECK(numeric_period_check(catalog_entry("exp"), 30, 10).verdict == Verdict::pass);
    CHECK(numeric_period_check(catalog_entry("weierstrass_g2_0_g3_m4"), 30, 6).verdict == Verdict::pass);
    CHECK(numeric_period_check(catalog_entry("exp_x_sin"), 30, 6).verdict == Verdict::pass);

    PeriodVector one(1);
    one.add(0, 0, 1);
    const auto bogus = numeric_period_check(catalog_entry("exp"), 50, 20, PeriodGroup(catalog_symbols(), 1, {one}));
    CHECK(bogus.verdict == Verdict::fail);
    PeriodVector pi(1);
    pi.add(0, 1 + *catalog_symbols().index_of("pi"), 1);
    CHECK(numeric_period_check(catalog_entry("sin"), 30, 8, PeriodGroup(catalog_symbols(), 1, {pi})).verdict ==
          Verdict::fail);
  }

  TEST_CASE("missing approximations") {
    const SymbolTable t({{"sigma", std::nullopt}});
    PeriodVector s(1);
    s.add(0, 1, 1);
    CHECK(error_of([&] { numeric_period_check(catalog_entry("sin"), 30, 4, PeriodGroup(t, 1, {s})); }) ==
          ErrorCode::missing_approximation);
    CHECK(error_of([] { numeric_period_check(catalog_entry("sin"), 90, 4); }) == ErrorCode::missing_approximation);
  }

  TEST_CASE("rank report") {
    const auto r = rank_report({&catalog_entry("identity"), &catalog_entry("sin"),
                                &catalog_entry("weierstrass_g2_0_g3_m4")});
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].rank == 0);
    CHECK(r.rows[1].rank == 1);
    CHECK(r.rows[2].rank == 2);
    CHECK(r.pairs.size() == 3);
    for (const auto& p : r.pairs) CHECK_FALSE(p.comparison.equal);
  }
  TEST_CASE("stored certificates re-verify at their budgets") {
    for (const auto& d : builtin_catalog()) {
      const auto cert = check_aat(d.germ(d.order + kReverifyMargin), d.degree_bound, d.order);
      CHECK_MESSAGE(cert.status == Verdict::pass, d.name);
      for (const auto& c : cert.components)
        if (c.annihilator) CHECK(c.annihilator->residual.describe() == "CLEAN(" + std::to_string(d.order + kReverifyMargin) + ")");
      CHECK_MESSAGE(recheck_aat(cert).ok, d.name);
    }
  }

  TEST_CASE("real entries promote to complex ones") {
    for (const auto& d : builtin_catalog())
      if (d.field == Field::rat) CHECK_MESSAGE(promote_real_to_complex(d.germ(8)).verdict == Verdict::pass, d.name);
  }

  TEST_CASE("period residuals shrink with precision") {
    for (const char* name : {"exp", "sin", "weierstrass_g2_0_g3_m4"}) {
      const auto lo = numeric_period_check(catalog_entry(name), 30, 4);
      const auto hi = numeric_period_check(catalog_entry(name), 60, 4);
      CHECK_MESSAGE(mpf_class(hi.max_residual, 512) < mpf_class(lo.max_residual, 512), name);
    }
  }
}
