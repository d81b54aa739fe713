#include "doctest.h"

#include "qlat/errors.hpp"
#include "qlat/suite.hpp"
#include "support.hpp"

using namespace qlat;
using json = nlohmann::json;

namespace {

const nlohmann::ordered_json& find_check(const nlohmann::ordered_json& report, const std::string& name) {
  for (const auto& c : report["checks"]) {
    if (c["check"] == name) return c;
  }
  FAIL("no check named " << name);
  static nlohmann::ordered_json none;
  return none;
}

}  // namespace

TEST_SUITE("suite") {
  TEST_CASE("configuration parsing") {
    auto c = RunConfig::from_text(R"({"instance": {"kind": "free_monoid", "rank": 2}, "fesspe": "{a,b}",
                                      "radius": {"default": 2, "commutation": 3}, "checks": ["grading"],
                                      "seed": 7, "sampling": {"exhaustive_limit": 10, "samples": 5}})");
    CHECK(c.instance.kind == MonoidKind::FreeMonoid);
    CHECK(c.fesspe == std::vector<std::string>{"a", "b"});
    CHECK(c.radius_for("grading") == 2);
    CHECK(c.radius_for("commutation") == 3);
    CHECK(c.enabled_checks() == std::vector<std::string>{"grading"});
    CHECK(c.sampling.seed == 7);
    CHECK(c.sampling.exhaustive_limit == 10);

    auto d = RunConfig::from_json(json{{"instance", {{"kind", "divisibility"}}}, {"fesspe", {"2", "3"}}});
    CHECK(d.enabled_checks() == check_order());
    CHECK(d.radius == 3);
    CHECK(RunConfig::from_json(d.to_json()).to_json() == d.to_json());

    CHECK_THROWS_AS(RunConfig::from_text("{"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json(json{{"fesspe", "{a}"}}), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json(json{{"instance", {{"kind", "divisibility"}}}, {"radius", 0}}), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json(json{{"instance", {{"kind", "divisibility"}}}, {"colour", 1}}), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json(json{{"instance", {{"kind", "divisibility"}}}, {"checks", {"nope"}}}),
                    ConfigError);
  }

  TEST_CASE("free monoid run passes") {
    auto c = RunConfig::from_json(json{{"instance", {{"kind", "free_monoid"}, {"rank", 2}}}, {"radius", 2}});
    auto r = run(c);
    CHECK(r.exit_code() == 0);
    auto j = r.to_json();
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].size() == check_order().size());
    CHECK(j["summary"]["fail"] == 0);
    CHECK(r.to_text().ends_with("PASS\n"));
  }

  TEST_CASE("divisibility without an exhaustive set fails and skips dependants") {
    auto c = RunConfig::from_json(json{{"instance", {{"kind", "divisibility"}}},
                                       {"fesspe", "{2,3,5}"},
                                       {"radius", 10},
                                       {"checks", {"fesspe", "chi-formula", "commutation", "grading"}}});
    auto r = run(c);
    CHECK(r.exit_code() == 1);
    auto j = r.to_json();
    const auto& f = find_check(j, "fesspe");
    CHECK(f["verdict"] == "fail");
    CHECK(f["witnesses"][0]["counterexample"] == "7");
    CHECK(find_check(j, "chi-formula")["verdict"] == "skipped");
    CHECK(find_check(j, "commutation")["verdict"] == "skipped");
    CHECK(find_check(j, "grading")["verdict"] == "pass");
  }

  TEST_CASE("half-line run flags instead of failing") {
    auto c = RunConfig::from_json(json{{"instance", {{"kind", "half_line"}, {"denominator_bound", 4}}},
                                       {"fesspe", "{1,3/2}"},
                                       {"radius", 3}});
    auto r = run(c);
    auto j = r.to_json();
    CHECK(r.exit_code() == 0);
    CHECK(find_check(j, "qlo-axioms")["verdict"] == "flagged");
    CHECK(find_check(j, "fesspe")["verdict"] == "flagged");
    CHECK(find_check(j, "commutation")["verdict"] == "skipped");
    CHECK(find_check(j, "nica-covariance")["verdict"] == "skipped");
    CHECK(find_check(j, "grading")["verdict"] == "pass");
    CHECK(find_check(j, "spectrum")["verdict"] == "pass");
  }

  TEST_CASE("reports are deterministic") {
    auto c = RunConfig::from_json(json{{"instance", {{"kind", "free_abelian"}, {"rank", 2}}},
                                       {"radius", 2},
                                       {"checks", {"commutation", "rank-one", "partition"}}});
    CHECK(run(c).to_json().dump() == run(c).to_json().dump());
  }

  TEST_CASE("sampled mode is labelled and reproducible") {
    auto c = RunConfig::from_json(json{{"instance", {{"kind", "free_monoid"}, {"rank", 2}}},
                                       {"radius", 2},
                                       {"checks", {"commutation"}},
                                       {"seed", 11},
                                       {"sampling", {{"exhaustive_limit", 50}, {"samples", 40}}}});
    auto a = run(c).to_json();
    const auto& check = find_check(a, "commutation");
    CHECK(check["mode"] == "sampled");
    CHECK(check["verdict"] == "pass");
    CHECK(a.dump() == run(c).to_json().dump());
  }

  TEST_CASE("search for an exhaustive set") {
    auto f2 = free_monoid(2);
    auto F = find_fesspe(*f2, 2, 4);
    REQUIRE(F);
    CHECK(*F == test::Es(f2, "{a,b}"));
    auto n2 = free_abelian(2);
    auto G = find_fesspe(*n2, 2, 4);
    REQUIRE(G);
    CHECK(*G == test::Es(n2, "{(1,0),(0,1)}"));
    CHECK_FALSE(find_fesspe(*divisibility(), 2, 10));
  }
}
