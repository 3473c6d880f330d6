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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prepsim/dynamics.hpp"
#include "prepsim/preparations.hpp"
#include "prepsim/tomography.hpp"

namespace prepsim {

using Json = nlohmann::ordered_json;

/// One named preparation procedure from a scenario config.
struct ProcedureSpec {
  std::string name;
  std::string kind; // "projective" | "stochastic" | "multipin"
  PreparationProcedure procedure;
};

/// Fully validated scenario: every dimension consistent, every literal
/// physical. Configs that fail any check never reach this type.
struct ScenarioConfig {
  std::string name;
  std::string description;
  Json echo;

  std::optional<BipartiteState> initial_state; // concrete single-run state
  std::string random_family;                   // "correlated" | "product" for sweeps
  int trials = 1;

  std::vector<ProcedureSpec> procedures;
  std::optional<JointDynamics> dynamics;
  std::optional<TomographyBasis> basis;
  std::vector<std::string> observable_labels;
  std::vector<Observable> observables;

  double cp_threshold = tol::cp_negativity;
  std::uint64_t seed = 0;
  std::string format = "human";
};

struct InputResult {
  int label = 0;
  double probability = 0.0;
  ComplexMatrix environment_state;
  std::vector<double> expectations;
};

struct DiagnosisResult {
  double choi_min_eigenvalue = 0.0;
  bool is_cp = false;
  double tp_deviation = 0.0;
  double linearity_residual = 0.0;
};

struct SweepResult {
  int trials = 0;
  double max_environment_dependence = 0.0;
  double mean_environment_dependence = 0.0;
};

struct ProcedureResult {
  std::string name;
  std::string kind;
  bool ok = true;
  std::string error;
  std::vector<InputResult> inputs;
  std::optional<double> environment_dependence;
  std::optional<DiagnosisResult> diagnosis;
  std::optional<SweepResult> sweep;
};

struct PairwiseResult {
  std::string proc_a;
  std::string proc_b;
  std::vector<double> per_input_distance;
  double max_distance = 0.0;
};

struct ScenarioReport {
  std::string scenario;
  Json config_echo;
  std::vector<std::string> observable_labels;
  std::vector<ProcedureResult> procedures;
  std::vector<PairwiseResult> pairwise;
  bool all_ok = true;
};

// ---------------------------------------------------------------------------
// Catalog, parsing, execution, rendering
// ---------------------------------------------------------------------------

/// Built-in scenarios as (name, description) pairs, in catalog order.
std::vector<std::pair<std::string, std::string>> list_scenarios();

/// Config document of a built-in scenario; throws ConfigError for unknown
/// names.
Json builtin_scenario(const std::string& name);

/// Parses JSON text, reporting parse failures with line:column context.
Json parse_json_text(const std::string& text, const std::string& source);

/// All validation findings for a config document; empty means it loads.
std::vector<std::string> validate_scenario(const Json& doc);

/// Validates and resolves a config document. Throws ConfigError carrying
/// every finding when anything fails.
ScenarioConfig parse_scenario(const Json& doc);

/// Runs every procedure of the scenario; failures in one procedure are
/// recorded and the rest still run.
ScenarioReport run_scenario(const ScenarioConfig& config);

/// Renders a report as "human", "json" (machine-readable, byte-deterministic
/// for a fixed config and seed) or "csv" (flat per-input table).
std::string render_report(const ScenarioReport& report,
                          const std::string& format);

} // namespace prepsim
