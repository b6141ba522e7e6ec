#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "regcat/cli/commands.hpp"
#include "support/golden.hpp"

using namespace regcat;
using namespace regcat::cli;
using testing::GoldenCase;

namespace {

  std::string scenario_path(std::string const& name) {
    return std::string(REGCAT_SCENARIO_DIR) + "/" + name + ".json";
  }

  std::set<std::string> const rejected_at_load{
      "zero_denominator", "malformed",          "float_entry",         "undeclared_arrow",
      "degree_unknown_object", "morphism_undeclared", "functor_missing_key", "algebra_both_structures",
      "module_over_coalgebra", "tqft_undeclared_generator", "tqft_boundary_mismatch",
      "lift_length_mismatch"};

  struct Outcome {
    int code;
    std::string out;
    std::string err;
  };

  Outcome run_case(GoldenCase const& c) {
    Options options;
    options.report = c.json ? ReportFormat::json : ReportFormat::text;
    options.stop_on_first_failure = c.stop;
    std::ostringstream out, err;
    int code = run(c.command, c.scenario_path(), options, out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("every loadable scenario round-trips through json", "[scenario]") {
  std::size_t loaded = 0;
  for (auto const& entry : std::filesystem::directory_iterator(REGCAT_SCENARIO_DIR)) {
    std::string name = entry.path().stem().string();
    if (rejected_at_load.count(name)) {
      continue;
    }
    INFO(name);
    Scenario s = load_scenario(entry.path().string());
    std::string text = to_json(s).dump(2);
    Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(to_json(back).dump(2) == text);
    ++loaded;
  }
  CHECK(loaded >= 40);
}

TEST_CASE("input errors are typed", "[scenario]") {
  CHECK_THROWS_AS(load_scenario(scenario_path("zero_denominator")), RationalFormatError);
  CHECK_THROWS_AS(load_scenario(scenario_path("float_entry")), RationalFormatError);
  CHECK_THROWS_AS(load_scenario(scenario_path("malformed")), ParseError);
  CHECK_THROWS_AS(load_scenario(scenario_path("does_not_exist")), ParseError);
  for (auto const* name : {"undeclared_arrow", "degree_unknown_object", "morphism_undeclared",
                           "functor_missing_key", "algebra_both_structures", "module_over_coalgebra",
                           "tqft_undeclared_generator", "lift_length_mismatch"}) {
    INFO(name);
    CHECK_THROWS_AS(load_scenario(scenario_path(name)), SchemaError);
  }
}

TEST_CASE("schema messages carry the path", "[scenario]") {
  CHECK_THROWS_WITH(parse_scenario(R"({"kind": "matrix", "matrix": [[1, "1/0"]]})"),
                    Catch::Matchers::ContainsSubstring("matrix[0][1]"));
  CHECK_THROWS_WITH(parse_scenario(R"({"kind": "matrix", "matrix": [[1, 2], [3]]})"),
                    Catch::Matchers::ContainsSubstring("matrix[1]"));
  CHECK_THROWS_WITH(parse_scenario(R"({"kind": "matrix", "matrix": [[1]], "extra": 1})"),
                    Catch::Matchers::ContainsSubstring("unknown key \"extra\""));
  CHECK_THROWS_WITH(parse_scenario(R"({"kind": "widget"})"),
                    Catch::Matchers::ContainsSubstring("unknown kind"));
  CHECK_THROWS_WITH(parse_scenario("{\n  \"kind\": \n}"),
                    Catch::Matchers::ContainsSubstring("line 3"));
  CHECK_THROWS_AS(parse_scenario(R"({"kind": "matrix", "matrix": [[true]]})"), SchemaError);
}

TEST_CASE("integer and string entries agree", "[scenario]") {
  auto a = parse_scenario(R"({"kind": "matrix", "matrix": [[1, -2], [0, 3]]})");
  auto b = parse_scenario(R"({"kind": "matrix", "matrix": [["1", "-4/2"], ["0/5", "3"]]})");
  CHECK(a == b);
}

TEST_CASE("command and scenario kind must match", "[execute]") {
  auto s = load_scenario(scenario_path("nilpotent"));
  CHECK_THROWS_AS(execute("pairing", s), SchemaError);
  CHECK_THROWS_AS(execute("no-such-command", s), SchemaError);
  CHECK(execute("ginverse", s).passed());
}

TEST_CASE("every command has a golden case of each outcome", "[golden]") {
  std::map<std::string, std::set<int>> seen;
  for (auto const& c : testing::golden_cases()) {
    seen[c.command].insert(c.exit_code);
  }
  for (auto const& name : command_names()) {
    INFO(name);
    CHECK(seen[name] == std::set<int>{0, 1, 2});
  }
}

TEST_CASE("run matches the goldens", "[golden]") {
  auto cases = testing::golden_cases();
  REQUIRE(cases.size() >= 42);
  for (auto const& c : cases) {
    INFO(c.command << " " << c.scenario << c.flags());
    auto got = run_case(c);
    CHECK(got.code == c.exit_code);
    std::string expected = testing::slurp(c.golden_path());
    REQUIRE(!expected.empty());
    if (c.exit_code == 2) {
      CHECK(got.out.empty());
      CHECK(got.err == expected);
    } else {
      CHECK(got.err.empty());
      CHECK(got.out == expected);
    }
  }
}

TEST_CASE("run is deterministic", "[golden]") {
  for (auto const& c : testing::golden_cases()) {
    INFO(c.command << " " << c.scenario);
    auto first = run_case(c);
    auto second = run_case(c);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}

TEST_CASE("json report mirrors the verdict", "[report]") {
  auto s = load_scenario(scenario_path("z2_zero_antipode"));
  auto v = execute("hopf-check", s);
  auto j = nlohmann::json::parse(render_json(v));
  CHECK(j["command"] == "hopf-check");
  CHECK(j["passed"] == false);
  REQUIRE(j["checks"].size() == v.checks.size());
  for (std::size_t i = 0; i < v.checks.size(); ++i) {
    CHECK(j["checks"][i]["law"] == v.checks[i].law);
    CHECK(j["checks"][i]["passed"] == v.checks[i].passed);
    CHECK(j["checks"][i].contains("witness") == v.checks[i].witness.has_value());
  }
}

TEST_CASE("stop on first failure keeps the failing check", "[report]") {
  auto s = load_scenario(scenario_path("corpus_with_nilpotent"));
  auto v = execute("obstruction-degree", s);
  REQUIRE(v.failures() == 3);
  v.truncate_after_failure();
  CHECK(v.failures() == 1);
  CHECK(!v.checks.back().passed);
  CHECK(v.checks.size() == 3);
}

TEST_CASE("law witness names the first differing column", "[report]") {
  auto ok = law("x", "y", Matrix{{1, 0}, {0, 1}}, Matrix{{1, 0}, {0, 1}});
  CHECK(ok.passed);
  CHECK(!ok.witness);
  auto bad = law("x", "y", Matrix{{1, 0}, {0, 1}}, Matrix{{1, 0}, {2, 1}});
  CHECK(!bad.passed);
  CHECK(*bad.witness == "at e1: (1, 0) vs (1, 2)");
}

TEST_CASE("odd chain length is rejected when the chain is built", "[execute]") {
  auto s = load_scenario(scenario_path("chain_odd"));
  CHECK_THROWS_AS(execute("check-chain", s), OddChainLength);
}
