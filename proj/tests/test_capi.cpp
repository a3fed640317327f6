// Exercises the shared library only through its C header.
#include "aatkit/aatkit.h"

#include <doctest.h>
#include <json.hpp>

#include <string>
#include <thread>

using Json = nlohmann::json;

namespace {

struct Result {
  int status = -1;
  int tier = -1;
  std::string text;
};

Result run(const std::string& command, const std::string& request) {
  aatkit_result* r = nullptr;
  Result out;
  out.status = aatkit_run(command.c_str(), request.c_str(), &r);
  if (r) {
    out.tier = aatkit_result_verdict(r);
    out.text = aatkit_result_json(r);
    aatkit_result_free(r);
  }
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("germ handles") {
    aatkit_germ* g = nullptr;
    REQUIRE(aatkit_germ_from_catalog("catalog:sin", 24, &g) == AATKIT_OK);
    CHECK(aatkit_germ_dimension(g) == 1);
    CHECK(aatkit_germ_order(g) == 24);
    aatkit_result* r = nullptr;
    REQUIRE(aatkit_aat_check(g, 6, 16, 0, &r) == AATKIT_OK);
    CHECK(aatkit_result_verdict(r) == AATKIT_VERDICT_PASS);
    const Json doc = Json::parse(aatkit_result_json(r));
    CHECK(doc["command"] == "aat-check");
    CHECK(doc["verdict"] == "PASS");
    aatkit_result_free(r);

    aatkit_result* j = nullptr;
    REQUIRE(aatkit_germ_to_json(g, &j) == AATKIT_OK);
    aatkit_germ* g2 = nullptr;
    REQUIRE(aatkit_germ_from_json(aatkit_result_json(j), &g2) == AATKIT_OK);
    CHECK(aatkit_germ_order(g2) == 24);
    aatkit_result* w = nullptr;
    REQUIRE(aatkit_iso_witness(g, g2, "[2]", 6, 16, 0, &w) == AATKIT_OK);
    CHECK(aatkit_result_verdict(w) == AATKIT_VERDICT_PASS);
    aatkit_result_free(w);
    aatkit_result_free(j);
    aatkit_germ_free(g2);
    aatkit_germ_free(g);
  }

  TEST_CASE("error codes") {
    aatkit_germ* g = nullptr;
    CHECK(aatkit_germ_from_catalog("nope", 8, &g) == AATKIT_NOT_FOUND);
    CHECK(g == nullptr);
    CHECK(std::string(aatkit_last_error()).find("nope") != std::string::npos);
    CHECK(aatkit_germ_from_json("{", &g) == AATKIT_PARSE_ERROR);
    CHECK(aatkit_germ_from_json(nullptr, &g) == AATKIT_INVALID_INPUT);
    CHECK(run("frobnicate", "{}").status == AATKIT_INVALID_INPUT);
    CHECK(run("aat-check", "[1]").status == AATKIT_PARSE_ERROR);
    CHECK(run("aat-check", R"({"map": "catalog:sin", "degree": 6})").status == AATKIT_PARSE_ERROR);
    CHECK(run("aat-check", R"({"map": "catalog:sin", "degree": 0, "order": 16})").status == AATKIT_INVALID_INPUT);
    CHECK(run("aat-check", R"({"map": "catalog:sin", "degree": 6, "order": 16, "max_monomials": 5})").status ==
          AATKIT_BUDGET_EXCEEDED);
    CHECK(run("iso-witness", R"({"f": "catalog:sin", "g": "catalog:sin", "alpha": [0], "degree": 6, "order": 16})")
              .status == AATKIT_SINGULAR_ALPHA);
    CHECK(std::string(aatkit_status_name(AATKIT_SINGULAR_ALPHA)) == "SingularAlpha");
    CHECK(std::string(aatkit_status_name(12345)) == "UNKNOWN");
    CHECK(aatkit_run("catalog", "{}", nullptr) == AATKIT_INVALID_INPUT);
    CHECK(run("catalog", "{}").status == AATKIT_OK);
    CHECK(std::string(aatkit_last_error()).empty());
  }

  TEST_CASE("verdict tiers") {
    CHECK(run("aat-check", R"({"map": "catalog:exp", "degree": 2, "order": 10})").tier == AATKIT_VERDICT_PASS);
    CHECK(run("iso-witness", R"({"f": "catalog:sin", "g": "catalog:exp", "alpha": [1], "degree": 6, "order": 20})")
              .tier == AATKIT_VERDICT_UNRESOLVED);
    CHECK(run("periods", R"({"op": "compare", "group": "catalog:sin", "other": "catalog:weierstrass_g2_0_g3_m4"})")
              .tier == AATKIT_VERDICT_FAIL);
    const auto scale = run("periods", R"({"op": "scale-into", "group": "catalog:sin", "other": "catalog:exp",
                                          "n_max": 50})");
    CHECK(scale.tier == AATKIT_VERDICT_UNRESOLVED);
    CHECK(Json::parse(scale.text)["verdict"] == "NOT_FOUND(50)");
    CHECK(run("verify-system", R"({"system": "catalog:sin", "order": 20})").tier == AATKIT_VERDICT_PASS);
  }

  TEST_CASE("round trips through the verify commands") {
    const auto a = run("aat-check", R"({"map": "catalog:sin", "degree": 6, "order": 16})");
    const auto v = run("verify-aat", Json{{"certificate", Json::parse(a.text)}}.dump());
    CHECK(v.status == AATKIT_OK);
    CHECK(v.tier == AATKIT_VERDICT_PASS);

    Json tampered = Json::parse(a.text);
    tampered["result"]["certificate"]["components"][0]["annihilator"]["poly"]["terms"][0][1] = "2";
    const auto t = run("verify-aat", Json{{"certificate", tampered}}.dump());
    CHECK(t.tier == AATKIT_VERDICT_FAIL);

    const auto same = run("verify", Json{{"certificate", Json::parse(a.text)}}.dump());
    CHECK(same.tier == AATKIT_VERDICT_PASS);
    const auto diff = run("verify", Json{{"certificate", tampered}}.dump());
    CHECK(diff.tier == AATKIT_VERDICT_FAIL);

    const auto iso = run("iso-witness", R"({"f": "catalog:sin", "g": "catalog:exp", "alpha": [1], "degree": 6,
                                            "order": 20})");
    CHECK(run("verify-iso", Json{{"certificate", Json::parse(iso.text)}}.dump()).tier == AATKIT_VERDICT_PASS);
  }

  TEST_CASE("algdep requests") {
    const Json series = Json::parse(R"({"vars": 1, "order": 12, "terms": [[[1], "1"]]})");
    Json sq{{"vars", 1}, {"order", 12}, {"terms", Json::array({Json::array({Json::array({2}), "1"})})}};
    const auto r = run("algdep", Json{{"target", sq}, {"basis", Json::array({series})}, {"degree", 2}, {"order", 4}}.dump());
    REQUIRE(r.status == AATKIT_OK);
    CHECK(r.tier == AATKIT_VERDICT_PASS);
    const Json doc = Json::parse(r.text);
    CHECK(doc["result"]["dependence"]["annihilator"]["poly"]["text"] == "-x1^2 + z");
    CHECK(run("verify-annihilator", Json{{"certificate", doc}}.dump()).tier == AATKIT_VERDICT_PASS);
  }

  TEST_CASE("determinism and concurrent use") {
    const std::string req = R"({"map": "catalog:sin", "degree": 6, "order": 16})";
    const auto a = run("aat-check", req);
    std::string b, c;
    std::thread t1([&] { b = run("aat-check", req).text; });
    std::thread t2([&] { c = run("period-check", R"({"map": "catalog:sin", "digits": 30, "samples": 4})").text; });
    t1.join();
    t2.join();
    CHECK(a.text == b);
    CHECK(c == run("period-check", R"({"map": "catalog:sin", "digits": 30, "samples": 4})").text);
  }
}
