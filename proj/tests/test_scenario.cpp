#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "towerlab/scenario/builtin.hpp"

using namespace towerlab::scenario;

namespace {

// P^2 over a point, one check on its dimension.
json tiny() {
    return json::parse(R"({
      "scenario": "tiny",
      "spaces": [
        {"id": "pt", "kind": "formal_base", "dim": 0, "pic": [], "canonical": []},
        {"id": "P", "kind": "proj_bundle", "gen": "H", "bundle": {"op": "trivial", "rank": 3, "space": "pt"}}
      ],
      "bundles": [],
      "maps": [],
      "curves": [{"id": "line", "kind": "fiber_line", "space": "P", "gen": "H"}],
      "expect": [
        {"check": "dim P", "compute": {"op": "dim", "space": "P"}, "value": 2, "provenance": "TRIVIAL", "anchor": "P^2"},
        {"check": "H on a line", "compute": {"op": "intersect", "curve": "line", "divisor": "H@P"}, "value": 1,
         "provenance": "TRIVIAL", "anchor": "P^2"}
      ]
    })");
}

template <class E>
E expect_throw(const json& doc) {
    try {
        Scenario s = parse_scenario_text(doc.dump(2));
        run(s, NChoice{});
    } catch (const E& e) {
        return e;
    }
    FAIL("no exception of the expected type");
    throw;
}

bool all_strings(const json& j) {
    if (j.is_number()) return false;
    if (j.is_structured())
        for (const auto& x : j)
            if (!all_strings(x)) return false;
    return true;
}

}  // namespace

TEST_CASE("a tiny document runs") {
    VerificationReport r = run(parse_scenario_text(tiny().dump()), NChoice{});
    CHECK(r.scenario == "tiny");
    CHECK(r.n == "symbolic");
    REQUIRE(r.checks.size() == 2);
    CHECK(r.all_pass());
    CHECK(r.checks[0].name < r.checks[1].name);
}

TEST_CASE("the built-in list is complete and described") {
    auto list = list_scenarios();
    CHECK(list.size() >= 13);
    for (const auto& s : list) CHECK_FALSE(s.description.empty());
    CHECK_THROWS_AS(builtin_scenario("no-such-scenario"), UnknownScenario);
}

TEST_CASE("every built-in passes symbolically and at n = 3, 4, 5") {
    for (const auto& info : list_scenarios()) {
        CAPTURE(info.name);
        for (std::optional<long> n : {std::optional<long>{}, std::optional<long>{3}, std::optional<long>{4},
                                      std::optional<long>{5}}) {
            VerificationReport r = run_scenario(info.name, NChoice{n});
            for (const auto& c : r.checks) {
                CAPTURE(c.name);
                CHECK(c.pass);
            }
            CHECK_FALSE(r.checks.empty());
        }
    }
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
    for (const auto& info : list_scenarios()) {
        CAPTURE(info.name);
        VerificationReport a = run_scenario(info.name, NChoice{4});
        VerificationReport b = run_scenario(info.name, NChoice{4});
        CHECK(to_json(a).dump() == to_json(b).dump());
        CHECK(report_from_json(to_json(a)) == a);
        CHECK(all_strings(to_json(a)["checks"]));
    }
    CHECK_THROWS_AS(report_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(json{{"scenario", "x"}}), std::invalid_argument);
}

TEST_CASE("exported documents load back and give the same report") {
    for (const auto& info : list_scenarios()) {
        CAPTURE(info.name);
        Scenario back = parse_scenario_text(export_scenario(info.name).dump(2));
        CHECK(back.name == info.name);
        CHECK(run(back, NChoice{}) == run_scenario(info.name, NChoice{}));
        CHECK(run(back, NChoice{5}) == run_scenario(info.name, NChoice{5}));
    }
}

TEST_CASE("symbolic values agree with their integer specializations") {
    VerificationReport sym = run_scenario("jz-canonical-class", NChoice{});
    for (long n : {3L, 4L, 5L}) {
        VerificationReport at = run_scenario("jz-canonical-class", NChoice{n});
        REQUIRE(at.checks.size() == sym.checks.size());
        for (size_t i = 0; i < at.checks.size(); ++i) CHECK(at.checks[i].name == sym.checks[i].name);
    }
    // the table is constant in n
    auto t3 = run_scenario("jz-intersection-table", NChoice{3});
    auto t7 = run_scenario("jz-intersection-table", NChoice{7});
    for (size_t i = 0; i < t3.checks.size(); ++i) CHECK(t3.checks[i].computed == t7.checks[i].computed);
}

TEST_CASE("n is validated") {
    CHECK_THROWS_AS(run_scenario("jz-intersection-table", NChoice{2}), InvalidN);
    json doc = tiny();
    doc["n_policy"] = "symbolic";
    Scenario s = parse_scenario_text(doc.dump());
    CHECK_NOTHROW(run(s, NChoice{}));
    CHECK_THROWS_AS(run(s, NChoice{4}), PolicyMismatch);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_scenario_text("{\n  \"scenario\": \"x\",\n  \"spaces\": [,]\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("schema violations are rejected") {
    json d = tiny();
    d["expect"][0].erase("provenance");
    CHECK_THROWS_AS(scenario_from_json(d), ScenarioError);

    d = tiny();
    d["expect"][0]["provenance"] = "GUESS";
    CHECK_THROWS_AS(scenario_from_json(d), ScenarioError);

    d = tiny();
    d["extra"] = 1;
    CHECK_THROWS_AS(scenario_from_json(d), ScenarioError);

    d = tiny();
    d["spaces"].push_back(d["spaces"][0]);
    CHECK_THROWS_AS(scenario_from_json(d), ScenarioError);

    d = tiny();
    d.erase("curves");
    CHECK_THROWS_AS(scenario_from_json(d), ScenarioError);
}

TEST_CASE("semantic errors name the offending object") {
    json d = tiny();
    d["spaces"][0]["canonical"] = json::array({1});
    CHECK(expect_throw<SemanticError>(d).object() == "pt");

    d = tiny();
    d["spaces"][1]["bundle"] = "Loop";
    d["bundles"] = json::parse(R"([{"id": "Loop", "op": "dual", "of": "Loop"}])");
    CHECK_FALSE(expect_throw<SemanticError>(d).object().empty());

    d = tiny();
    d["preflight"] = json::parse(R"([{"check": "wrong dim", "compute": {"op": "dim", "space": "P"}, "value": 5}])");
    CHECK(std::string(expect_throw<ScenarioError>(d).what()).find("wrong dim") != std::string::npos);
}

TEST_CASE("a wrong expectation fails without throwing") {
    json d = tiny();
    d["expect"][0]["value"] = 3;
    VerificationReport r = run(parse_scenario_text(d.dump()), NChoice{});
    CHECK_FALSE(r.all_pass());
    CHECK(r.passed() == 1);
}
