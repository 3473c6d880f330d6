// Copyright 2026 The prepsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "prepsim/scenario.hpp"

using namespace prepsim;

TEST_CASE("list_scenarios: catalog contents") {
  auto catalog = list_scenarios();
  CHECK(catalog.size() >= 4);
  bool has_motivation = false;
  bool has_cp_violation = false;
  for (const auto& [name, description] : catalog) {
    has_motivation |= (name == "motivation");
    has_cp_violation |= (name == "tomography-cp-violation");
    CHECK_FALSE(description.empty());
  }
  CHECK(has_motivation);
  CHECK(has_cp_violation);
  CHECK_THROWS_AS(builtin_scenario("no-such-scenario"), ConfigError);
}

TEST_CASE("builtin configs all validate cleanly") {
  for (const auto& [name, description] : list_scenarios()) {
    std::vector<std::string> findings = validate_scenario(builtin_scenario(name));
    for (const std::string& finding : findings) {
      FAIL_CHECK(name << ": " << finding);
    }
    CHECK(findings.empty());
  }
}

TEST_CASE("motivation scenario: the paper's two routes disagree") {
  ScenarioReport report =
      run_scenario(parse_scenario(builtin_scenario("motivation")));
  REQUIRE(report.procedures.size() == 2);
  REQUIRE(report.all_ok);

  const ProcedureResult& projective = report.procedures[0];
  REQUIRE(projective.environment_dependence.has_value());
  CHECK(*projective.environment_dependence ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(projective.inputs[0].probability == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(projective.inputs[1].probability == doctest::Approx(0.5).epsilon(1e-10));

  const ProcedureResult& stochastic = report.procedures[1];
  REQUIRE(stochastic.environment_dependence.has_value());
  CHECK(*stochastic.environment_dependence < 1e-12);

  REQUIRE(report.pairwise.size() == 1);
  CHECK(report.pairwise[0].max_distance == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("uncorrelated scenario: every procedure is neutral and CP") {
  ScenarioReport report =
      run_scenario(parse_scenario(builtin_scenario("uncorrelated")));
  REQUIRE(report.all_ok);
  REQUIRE(report.procedures.size() == 3);
  for (const ProcedureResult& proc : report.procedures) {
    REQUIRE(proc.environment_dependence.has_value());
    CHECK(*proc.environment_dependence < 1e-12);
    REQUIRE(proc.diagnosis.has_value());
    CHECK(proc.diagnosis->is_cp);
  }
}

TEST_CASE("tomography-cp-violation scenario: verdicts split by procedure") {
  ScenarioReport report =
      run_scenario(parse_scenario(builtin_scenario("tomography-cp-violation")));
  REQUIRE(report.all_ok);
  REQUIRE(report.procedures.size() == 2);

  const ProcedureResult& projective = report.procedures[0];
  REQUIRE(projective.diagnosis.has_value());
  CHECK_FALSE(projective.diagnosis->is_cp);
  CHECK(projective.diagnosis->choi_min_eigenvalue < -1e-3);

  const ProcedureResult& stochastic = report.procedures[1];
  REQUIRE(stochastic.diagnosis.has_value());
  CHECK(stochastic.diagnosis->is_cp);
  CHECK(stochastic.diagnosis->tp_deviation < 1e-9);
}

TEST_CASE("sweep scenarios aggregate seeded trials") {
  Json doc = builtin_scenario("stochastic-constancy-sweep");
  doc["trials"] = 5;
  ScenarioReport report = run_scenario(parse_scenario(doc));
  REQUIRE(report.procedures.size() == 1);
  REQUIRE(report.procedures[0].sweep.has_value());
  CHECK(report.procedures[0].sweep->trials == 5);
  CHECK(report.procedures[0].sweep->max_environment_dependence < 1e-12);
}

TEST_CASE("machine-readable reports are byte deterministic") {
  Json doc = builtin_scenario("tomography-cp-violation");
  std::string first = render_report(run_scenario(parse_scenario(doc)), "json");
  std::string second = render_report(run_scenario(parse_scenario(doc)), "json");
  CHECK(first == second);
  CHECK_FALSE(first.empty());

  Json sweep_doc = builtin_scenario("stochastic-constancy-sweep");
  std::string sweep_a = render_report(run_scenario(parse_scenario(sweep_doc)), "json");
  std::string sweep_b = render_report(run_scenario(parse_scenario(sweep_doc)), "json");
  CHECK(sweep_a == sweep_b);
}

TEST_CASE("csv report carries the per-input numeric table") {
  ScenarioReport report =
      run_scenario(parse_scenario(builtin_scenario("tomography-cp-violation")));
  std::string csv = render_report(report, "csv");
  CHECK(csv.rfind("procedure,input,probability,X,Y,Z\n", 0) == 0);
  // Two procedures, four inputs each, plus the header.
  int lines = 0;
  for (char c : csv) {
    lines += (c == '\n');
  }
  CHECK(lines == 9);
}

TEST_CASE("validate: unphysical matrix literal names the field") {
  Json doc = builtin_scenario("motivation");
  doc["initial_state"] = Json::parse(R"({
    "matrix": [
      [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
      [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
      [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 0.0]],
      [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]
    ],
    "dims": [2, 2]
  })");
  std::vector<std::string> findings = validate_scenario(doc);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].find("initial_state") != std::string::npos);
  CHECK(findings[0].find("trace") != std::string::npos);
}

TEST_CASE("validate: state/dynamics dimension mismatch is one finding") {
  Json doc = builtin_scenario("motivation");
  doc["dynamics"] = Json::parse(R"({
    "unitary": [
      [[1.0, 0.0], [0.0, 0.0]],
      [[0.0, 0.0], [1.0, 0.0]]
    ]
  })");
  std::vector<std::string> findings = validate_scenario(doc);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].find("dynamics") != std::string::npos);
  CHECK(findings[0].find("dimension") != std::string::npos);
}

TEST_CASE("validate: procedure inputs must match the declared basis") {
  Json doc = builtin_scenario("tomography-cp-violation");
  doc["procedures"][0]["projectors"] = Json::array({"z-", "z+", "x+", "y+"});
  std::vector<std::string> findings = validate_scenario(doc);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].find("projective") != std::string::npos);
  CHECK(findings[0].find("basis") != std::string::npos);
}

TEST_CASE("validate: unknown fields and bad kinds are flagged") {
  Json doc = builtin_scenario("motivation");
  doc["tpyo"] = 1;
  doc["procedures"][1]["kind"] = "telepathic";
  std::vector<std::string> findings = validate_scenario(doc);
  CHECK(findings.size() == 2);
}

TEST_CASE("validate: wrong JSON types become findings, not crashes") {
  Json doc = builtin_scenario("motivation");
  doc["name"] = 42;
  doc["seed"] = "zero";
  doc["procedures"][0]["kind"] = Json::array();
  std::vector<std::string> findings = validate_scenario(doc);
  CHECK(findings.size() == 3);
}

TEST_CASE("parse_json_text: syntax errors carry line context") {
  try {
    parse_json_text("{\n  \"name\": oops\n}", "broken.json");
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("broken.json:2:") != std::string::npos);
  }
}

TEST_CASE("runtime failure in one procedure leaves the others running") {
  Json doc = Json::parse(R"({
    "name": "impossible",
    "initial_state": "product z+ z+",
    "dynamics": "CNOT",
    "procedures": [
      {"name": "doomed", "kind": "projective", "projectors": ["z-", "z+"]},
      {"name": "fine", "kind": "stochastic", "pin": "z+", "rotations": ["I", "X"]}
    ]
  })");
  ScenarioReport report = run_scenario(parse_scenario(doc));
  CHECK_FALSE(report.all_ok);
  REQUIRE(report.procedures.size() == 2);
  CHECK_FALSE(report.procedures[0].ok);
  CHECK(report.procedures[0].error.find("input 0") != std::string::npos);
  CHECK(report.procedures[1].ok);
  CHECK(report.pairwise.empty());
}

TEST_CASE("tolerance override loosens the CP verdict only") {
  Json doc = builtin_scenario("tomography-cp-violation");
  ScenarioConfig config = parse_scenario(doc);
  config.cp_threshold = 1.0;
  ScenarioReport report = run_scenario(config);
  REQUIRE(report.procedures[0].diagnosis.has_value());
  // The raw eigenvalue still reads -0.5; only the verdict moved.
  CHECK(report.procedures[0].diagnosis->choi_min_eigenvalue ==
        doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(report.procedures[0].diagnosis->is_cp);
}
