#include "support.hpp"

#include "aatkit/json_io.hpp"

using namespace aatkit;
using namespace aatkit::test;
using aatkit::io::Json;

TEST_SUITE("json") {
  TEST_CASE("scalars") {
    CHECK(io::to_json(ExactScalar(Rational(-3, 4))) == "-3/4");
    CHECK(io::scalar_from(io::to_json(ExactScalar(Rational(1, 2), Rational(-5)))) ==
          ExactScalar(Rational(1, 2), Rational(-5)));
    CHECK(io::scalar_from(Json(7)) == ExactScalar(7));
    CHECK(error_of([] { io::scalar_from(Json(0.5)); }) == ErrorCode::parse_error);
    CHECK(error_of([] { io::scalar_from(Json("1/0")); }) == ErrorCode::parse_error);
  }

  TEST_CASE("series and germs round trip") {
    std::mt19937_64 rng(9);
    const auto s = random_series(rng, 3, 5);
    CHECK(io::series_from(io::to_json(s)) == s);
    const auto g = catalog_entry("sin_x_weierstrass").germ(10);
    const auto back = io::germ_from(io::to_json(g));
    CHECK(back.components() == g.components());
    CHECK(back.provenance() == g.provenance());
    const Json spec{{"odes", Json::array({io::to_json(weierstrass_spec())})}, {"order", 10}};
    CHECK(io::germ_from(spec)[0] == catalog_entry("weierstrass_g2_0_g3_m4").germ(10)[0]);
  }

  TEST_CASE("ode specs are validated on read") {
    Json j = io::to_json(weierstrass_spec());
    CHECK(io::ode_from(j).p1 == ExactScalar(2));
    j["p1"] = "3";
    CHECK(error_of([&] { io::ode_from(j); }) == ErrorCode::curve_equation_violated);
    CHECK(error_of([] { io::ode_from(Json{{"kind", "COSH"}}); }) != ErrorCode::ok);
  }

  TEST_CASE("certificates round trip") {
    const auto c = check_aat(catalog_entry("sin").germ(24), 6, 16);
    const Json j = io::to_json(c);
    const auto back = io::certificate_from(j);
    CHECK(io::to_json(back) == j);
    CHECK(recheck_aat(back).ok);
    CHECK(io::dump(j) == io::dump(io::to_json(back)));
  }

  TEST_CASE("systems round trip") {
    const auto sys = *catalog_entry("sin").system(12);
    const auto back = io::system_from(io::to_json(sys));
    CHECK(verify_rational_system(back, 12).clean);
    CHECK(io::to_json(back) == io::to_json(sys));
  }

  TEST_CASE("period groups") {
    const auto& wp = catalog_entry("weierstrass_g2_0_g3_m4").periods;
    Json j = io::to_json(wp);
    CHECK(j["zrank"] == 2);
    const auto back = io::period_group_from(j);
    CHECK(back.zrank() == 2);
    CHECK(back.generators() == wp.generators());
    j["zrank"] = 1;
    CHECK(error_of([&] { io::period_group_from(j); }) == ErrorCode::invalid_input);
    const Json hand = Json::parse(R"({"symbols": [{"name": "sigma"}], "dimension": 1,
                                      "generators": [[{"1": "1"}], [{"sigma": "1"}]]})");
    const auto g = io::period_group_from(hand);
    CHECK_FALSE(g.is_discrete());
    const Json unknown = Json::parse(R"({"dimension": 1, "generators": [[{"tau": "1"}]]})");
    CHECK(error_of([&] { io::period_group_from(unknown); }) == ErrorCode::invalid_input);
  }

  TEST_CASE("matrices") {
    CHECK(io::matrix_from(Json::parse("[2]")) == ScalarMatrix{{ExactScalar(2)}});
    CHECK(io::matrix_from(Json::parse(R"([["1", 0], [0, "1/2"]])"))[1][1] == ExactScalar(Rational(1, 2)));
    CHECK(error_of([] { io::matrix_from(Json::parse("[[1, 2]]")); }) != ErrorCode::ok);
  }

  TEST_CASE("branch problems") {
    const Json j = Json::parse(R"({"poly": "y^2 - x", "a": "-1", "b": "4"})");
    const auto p = io::branch_problem_from(j);
    CHECK(p.a == -1);
    CHECK(io::branch_problem_from(io::to_json(p)).p == p.p);
    const auto cells = cell_partition(p);
    CHECK(io::cell_from(io::to_json(cells[3])).count == 2);
    CHECK(error_of([] { io::branch_problem_from(Json::parse(R"({"poly": "y - z", "a": "0", "b": "1"})")); }) ==
          ErrorCode::parse_error);
  }

  TEST_CASE("malformed text") {
    CHECK(error_of([] { io::parse("{\"a\": "); }) == ErrorCode::parse_error);
    CHECK(error_of([] { io::series_from(Json::parse(R"({"vars": 1})")); }) == ErrorCode::parse_error);
  }
}
