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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prepsim/scenario.hpp"
#include "prepsim/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw prepsim::ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Relative output paths land in $PREPSIM_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& output) {
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("PREPSIM_OUTPUT_DIR")) {
      return std::filesystem::path(dir) / path;
    }
  }
  return path;
}

int run_command(const std::string& config_path, const std::string& scenario,
                const std::string& output, const std::string& format_override,
                bool seed_set, std::uint64_t seed, bool tolerance_set,
                double tolerance) {
  prepsim::Json doc;
  try {
    if (!config_path.empty() && !scenario.empty()) {
      throw prepsim::ConfigError("pass either --config or --scenario, not both");
    }
    if (config_path.empty() && scenario.empty()) {
      throw prepsim::ConfigError("pass --config <file> or --scenario <name>");
    }
    doc = config_path.empty()
              ? prepsim::builtin_scenario(scenario)
              : prepsim::parse_json_text(read_file(config_path), config_path);
  } catch (const prepsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  prepsim::ScenarioConfig config;
  try {
    config = prepsim::parse_scenario(doc);
  } catch (const prepsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  if (seed_set) {
    config.seed = seed;
  }
  if (tolerance_set) {
    config.cp_threshold = tolerance;
  }
  if (!format_override.empty()) {
    config.format = format_override;
  }

  prepsim::ScenarioReport report;
  std::string rendered;
  try {
    report = prepsim::run_scenario(config);
    rendered = prepsim::render_report(report, config.format);
  } catch (const prepsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  if (output.empty()) {
    std::cout << rendered;
  } else {
    const std::filesystem::path path = resolve_output(output);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to '" << path.string() << "'\n";
      return kExitRuntime;
    }
    out << rendered;
    std::cout << "report written to " << path.string() << "\n";
  }

  if (!report.all_ok) {
    std::cerr << "warning: some procedures failed; see the report\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int list_command() {
  for (const auto& [name, description] : prepsim::list_scenarios()) {
    std::cout << name << "\n    " << description << "\n";
  }
  return kExitOk;
}

int validate_command(const std::string& config_path) {
  std::vector<std::string> findings;
  try {
    prepsim::Json doc =
        prepsim::parse_json_text(read_file(config_path), config_path);
    findings = prepsim::validate_scenario(doc);
  } catch (const prepsim::Error& e) {
    findings.push_back(e.what());
  }
  if (findings.empty()) {
    std::cout << config_path << ": OK\n";
    return kExitOk;
  }
  for (const std::string& finding : findings) {
    std::cout << config_path << ": " << finding << "\n";
  }
  return kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"prepsim: preparation procedures for open quantum systems"};
  app.set_version_flag("--version", std::string("prepsim ") + prepsim::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario;
  std::string output;
  std::string format;
  std::uint64_t seed = 0;
  double tolerance = 0.0;

  CLI::App* run = app.add_subcommand("run", "Run a scenario and emit its report");
  run->add_option("-c,--config", config_path, "Scenario config file (JSON)");
  run->add_option("-s,--scenario", scenario, "Built-in scenario name");
  run->add_option("-o,--output", output,
                  "Report file (default: stdout; relative paths resolve "
                  "against $PREPSIM_OUTPUT_DIR)");
  run->add_option("-f,--format", format, "Report format: human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "Override the config seed (sweeps only)");
  CLI::Option* tol_opt = run->add_option(
      "--tolerance", tolerance,
      "Override the CP verdict threshold on the Choi minimum eigenvalue");

  CLI::App* list = app.add_subcommand("list", "List built-in scenarios");

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate", "Validate a scenario config file");
  validate->add_option("config", validate_path, "Config file to validate")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    return run_command(config_path, scenario, output, format,
                       seed_opt->count() > 0, seed, tol_opt->count() > 0,
                       tolerance);
  }
  if (list->parsed()) {
    return list_command();
  }
  if (validate->parsed()) {
    return validate_command(validate_path);
  }
  return kExitValidation;
}
