#include "support.hpp"

#include "aatkit/algdep.hpp"
#include "aatkit/exact_linalg.hpp"

using namespace aatkit;
using namespace aatkit::test;

namespace {

const std::vector<std::string> kXZ{"x1", "x2", "z"};

// sin u, sin v, sin(u + v) in two variables.
std::vector<TruncatedSeries> sin_addition(unsigned order) {
  const auto s = generate_series(kind(OdeKind::sin), order);
  const std::size_t u[] = {0}, v[] = {1};
  return {s.embedded(2, u), s.embedded(2, v), block_sum_substitute(s, order)};
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("parse and print") {
    const auto p = parse_polynomial("z^2 - 4*x1^2*(1 - x1^2)", std::vector<std::string>{"x1", "z"});
    CHECK(p.total_degree() == 4);
    CHECK(p.coeff(MultiIndex{4, 0}) == ExactScalar(4));
    CHECK(p.coeff(MultiIndex{2, 0}) == ExactScalar(-4));
    const std::vector<std::string> names{"x1", "z"};
    CHECK(parse_polynomial(p.to_string(names), names) == p);
    CHECK(error_of([&] { parse_polynomial("x1 + w", names); }) == ErrorCode::parse_error);
    CHECK(error_of([&] { parse_polynomial("(x1", names); }) == ErrorCode::parse_error);
  }

  TEST_CASE("exact division") {
    const std::vector<std::string> n{"x", "y"};
    const auto a = parse_polynomial("x^2 - y^2", n), b = parse_polynomial("x + y", n);
    const auto q = divide_exact(a, b);
    REQUIRE(q.has_value());
    CHECK(*q == parse_polynomial("x - y", n));
    CHECK_FALSE(divide_exact(a, parse_polynomial("x + 2*y", n)).has_value());
  }

  TEST_CASE("canonical form is primitive with positive lex-leading coefficient") {
    const std::vector<std::string> n{"x", "z"};
    const auto p = parse_polynomial("-6*z + 3/2*x*z - 9", n);
    const std::size_t pri[] = {1, 0};
    const auto c = canonicalize(p, pri);
    CHECK(c == parse_polynomial("x*z - 4*z - 6", n));
    CHECK(canonicalize(ExactScalar(Rational(-5, 7)) * c, pri) == c);
  }

  TEST_CASE("substitution into series matches evaluation of products") {
    std::mt19937_64 rng(2);
    const auto a = random_series(rng, 2, 6), b = random_series(rng, 2, 6);
    const auto p = parse_polynomial("x^2*y - 3*y + 1/2", std::vector<std::string>{"x", "y"});
    const std::vector<TruncatedSeries> xs{a, b};
    CHECK(p.substitute(xs) == a * a * b - ExactScalar(3) * b + TruncatedSeries::constant(2, 6, ExactScalar(Rational(1, 2))));
  }

  TEST_CASE("hermite and smith forms") {
    IntMatrix m{{Integer(2), Integer(4)}, {Integer(6), Integer(8)}};
    const auto h = hermite_normal_form(m, 2);
    REQUIRE(h.rows.size() == 2);
    CHECK(h.rows[0][0] == 2);
    CHECK(h.rows[1][1] == 4);
    CHECK(smith_invariants(m, 2) == std::vector<Integer>{Integer(2), Integer(4)});
    CHECK(lattice_coordinates(h, {Integer(8), Integer(12)}).has_value());
    CHECK_FALSE(lattice_coordinates(h, {Integer(1), Integer(0)}).has_value());
  }
}

TEST_SUITE("algdep") {
  TEST_CASE("hand-derived sin addition relation is clean") {
    const auto oracle = parse_polynomial("(z^2 + x1^2 - x2^2)^2 - 4*z^2*x1^2*(1 - x2^2)", kXZ);
    const auto series = sin_addition(16);
    const auto r = verify_polynomial(oracle, series, 16);
    CHECK(r.clean);
    CHECK(r.describe() == "CLEAN(16)");
  }

  TEST_CASE("found sin annihilator divides the hand-derived one") {
    const auto series = sin_addition(24);
    const std::vector<TruncatedSeries> basis{series[0], series[1]};
    const auto v = find_annihilator(series[2], basis, 6, 16);
    REQUIRE(v.dependent());
    CHECK(v.annihilator->residual.clean);
    CHECK(v.annihilator->residual.order == 24);
    const auto oracle = parse_polynomial("(z^2 + x1^2 - x2^2)^2 - 4*z^2*x1^2*(1 - x2^2)", kXZ);
    CHECK(divide_exact(oracle, v.annihilator->poly).has_value());
    CHECK(v.annihilator->poly.degree_in(2) >= 1);
  }

  TEST_CASE("a perturbed relation leaves a residual") {
    const auto wrong = parse_polynomial("(z^2 + x1^2 - x2^2)^2 - 4*z^2*x1^2*(1 + x2^2)", kXZ);
    const auto r = verify_polynomial(wrong, sin_addition(16), 16);
    REQUIRE_FALSE(r.clean);
    REQUIRE(r.residual.has_value());
    CHECK(r.residual->index.total_degree() == 6);
  }

  TEST_CASE("sin and exp at d=6: kernel dimension 8 at N=20, none at N=28") {
    const auto s = generate_series(kind(OdeKind::sin), 36);
    const auto e = generate_series(kind(OdeKind::exp), 36);
    const std::vector<TruncatedSeries> basis{s};
    const auto v = find_annihilator(e, basis, 6, 20);
    CHECK(v.outcome == DependenceOutcome::unconfirmed);
    CHECK(v.unknowns == 28);
    CHECK(v.equations == 20);
    CHECK(v.kernel_dimension == 8);
    CHECK(v.rejected.has_value());
    const auto w = find_annihilator(e, basis, 6, 28);
    CHECK(w.outcome == DependenceOutcome::independent_up_to);
    CHECK(w.kernel_dimension == 0);
  }

  TEST_CASE("sin and cos are jointly dependent") {
    const auto s = generate_series(kind(OdeKind::sin), 20), c = generate_series(kind(OdeKind::cos), 20);
    const std::vector<TruncatedSeries> both{s, c};
    const auto v = independence_verdict(both, 2, 12);
    REQUIRE(v.dependent());
    CHECK(v.annihilator->poly == parse_polynomial("x1^2 + x2^2 - 1", std::vector<std::string>{"x1", "x2"}));
  }

  TEST_CASE("gaussian coefficients") {
    // exp(i u) and exp(-i u) multiply to one
    const auto e = generate_series(kind(OdeKind::exp), 20);
    const GermMap g({e}, Field::rat, "exp");
    const auto a = compose_linear(g, {{ExactScalar::i()}})[0], b = compose_linear(g, {{-ExactScalar::i()}})[0];
    const std::vector<TruncatedSeries> basis{a};
    const auto v = find_annihilator(b, basis, 2, 10);
    REQUIRE(v.dependent());
    CHECK(v.annihilator->poly == parse_polynomial("x1*z - 1", std::vector<std::string>{"x1", "z"}));
  }

  TEST_CASE("budgets") {
    const auto series = sin_addition(20);
    const std::vector<TruncatedSeries> basis{series[0], series[1]};
    SearchOptions o;
    o.max_monomials = 10;
    CHECK(error_of([&] { find_annihilator(series[2], basis, 6, 12, o); }) == ErrorCode::budget_exceeded);
    CHECK(error_of([&] { find_annihilator(series[2], basis, 6, 16); }) == ErrorCode::order_exceeded);
    CHECK(error_of([&] { find_annihilator(series[2], basis, 6, 6); }) == ErrorCode::order_too_low);
    CHECK(error_of([&] { find_annihilator(series[2], basis, 0, 12); }) == ErrorCode::invalid_input);
  }

  TEST_CASE("dependence is monotone in the degree bound") {
    const auto series = sin_addition(24);
    const std::vector<TruncatedSeries> basis{series[0], series[1]};
    REQUIRE(find_annihilator(series[2], basis, 6, 16).dependent());
    for (unsigned d : {7u, 8u}) {
      const auto r = find_annihilator(series[2], basis, d, 16);
      REQUIRE(r.dependent());
      CHECK(r.annihilator->degree <= 6);
    }
  }

  TEST_CASE("annihilator scalars stay canonical") {
    const auto series = sin_addition(24);
    const std::vector<TruncatedSeries> basis{series[0], series[1]};
    const auto v = find_annihilator(series[2], basis, 6, 16);
    REQUIRE(v.dependent());
    for (const auto& [m, c] : v.annihilator->poly.terms())
      for (const Rational& q : {c.re(), c.im()}) {
        CHECK(q.get_den() > 0);
        CHECK(gcd(q.get_num(), q.get_den()) == 1);
      }
  }
}
