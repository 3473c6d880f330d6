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

#include "prepsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "prepsim/random.hpp"
#include "prepsim/version.hpp"

namespace prepsim {

namespace {

// ---------------------------------------------------------------------------
// Literal parsing
// ---------------------------------------------------------------------------

/// Reruns `f`, turning library errors into ConfigError tagged with the field
/// path so findings name the offending field.
template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Complex parse_complex(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(path + ": expected a [re, im] number pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

ComplexMatrix parse_matrix_rows(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError(path + ": expected a nonempty array of rows");
  }
  const auto n = j.size();
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) {
      throw ConfigError(path + ": row " + std::to_string(r) + " must hold " +
                        std::to_string(n) + " [re, im] pairs (square matrix)");
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c], path + "[" + std::to_string(r) + "][" +
                                     std::to_string(c) + "]");
    }
  }
  return m;
}

std::optional<PureStateVector> named_pure(const std::string& s) {
  if (s == "z+" || s == "0") return z_plus();
  if (s == "z-" || s == "1") return z_minus();
  if (s == "x+") return x_plus();
  if (s == "x-") return x_minus();
  if (s == "y+") return y_plus();
  if (s == "y-") return y_minus();
  return std::nullopt;
}

PureStateVector parse_pure(const Json& j, const std::string& path) {
  if (j.is_string()) {
    std::optional<PureStateVector> named = named_pure(j.get<std::string>());
    if (!named) {
      throw ConfigError(path + ": unknown state name '" + j.get<std::string>() +
                        "' (expected z+/z-/x+/x-/y+/y- or 0/1)");
    }
    return *named;
  }
  if (j.is_object() && j.contains("vector")) {
    const Json& v = j["vector"];
    if (!v.is_array() || v.empty()) {
      throw ConfigError(path + ".vector: expected an array of [re, im] pairs");
    }
    ComplexVector amps(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      amps(static_cast<Eigen::Index>(i)) =
          parse_complex(v[i], path + ".vector[" + std::to_string(i) + "]");
    }
    return with_path(path, [&] { return PureStateVector(std::move(amps)); });
  }
  throw ConfigError(path + ": expected a state name or {\"vector\": [...]}");
}

DensityMatrix parse_density(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "mixed") return mixed_qubit();
    std::optional<PureStateVector> named = named_pure(s);
    if (!named) {
      throw ConfigError(path + ": unknown state name '" + s + "'");
    }
    return pure_density(*named);
  }
  if (j.is_object() && j.contains("matrix")) {
    return with_path(
        path, [&] { return DensityMatrix(parse_matrix_rows(j["matrix"], path + ".matrix")); });
  }
  if (j.is_object() && j.contains("vector")) {
    return pure_density(parse_pure(j, path));
  }
  throw ConfigError(path +
                    ": expected a state name, {\"matrix\": ...} or {\"vector\": ...}");
}

std::optional<ComplexMatrix> named_unitary_1q(const std::string& s) {
  if (s == "I") return identity(2);
  if (s == "X") return pauli_x();
  if (s == "Y") return pauli_y();
  if (s == "Z") return pauli_z();
  if (s == "H") return hadamard();
  if (s == "S") return phase_s();
  if (s == "T") return phase_t();
  if (s == "SH") return ComplexMatrix(phase_s() * hadamard());
  return std::nullopt;
}

/// "name p=<value>" -> value; nullopt when the prefix does not match.
std::optional<double> parse_parametrized(const std::string& s,
                                         const std::string& prefix,
                                         const std::string& path) {
  if (s.rfind(prefix + " p=", 0) != 0) {
    return std::nullopt;
  }
  const std::string tail = s.substr(prefix.size() + 3);
  try {
    std::size_t used = 0;
    const double value = std::stod(tail, &used);
    if (used != tail.size()) {
      throw std::invalid_argument(tail);
    }
    return value;
  } catch (const std::exception&) {
    throw ConfigError(path + ": cannot parse parameter in '" + s + "'");
  }
}

KrausChannel parse_channel(const Json& j, const std::string& path,
                           int expected_dim) {
  KrausChannel channel = [&]() -> KrausChannel {
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      if (std::optional<double> p = parse_parametrized(s, "depolarizing", path)) {
        return with_path(path, [&] { return depolarizing_channel(*p); });
      }
      std::optional<ComplexMatrix> u = named_unitary_1q(s);
      if (!u) {
        throw ConfigError(path + ": unknown operation '" + s + "'");
      }
      return unitary_channel(*u);
    }
    if (j.is_object() && j.contains("matrix")) {
      return with_path(path, [&] {
        return unitary_channel(parse_matrix_rows(j["matrix"], path + ".matrix"));
      });
    }
    if (j.is_object() && j.contains("kraus")) {
      const Json& list = j["kraus"];
      if (!list.is_array() || list.empty()) {
        throw ConfigError(path + ".kraus: expected a nonempty array of matrices");
      }
      std::vector<ComplexMatrix> ops;
      for (std::size_t k = 0; k < list.size(); ++k) {
        ops.push_back(parse_matrix_rows(list[k], path + ".kraus[" +
                                                     std::to_string(k) + "]"));
      }
      return with_path(path, [&] { return KrausChannel(std::move(ops)); });
    }
    throw ConfigError(path +
                      ": expected an operation name, {\"matrix\": ...} or {\"kraus\": ...}");
  }();
  if (channel.dim() != expected_dim) {
    throw ConfigError(path + ": operation dimension " +
                      std::to_string(channel.dim()) + " != expected " +
                      std::to_string(expected_dim));
  }
  return channel;
}

JointDynamics parse_dynamics(const Json& j, const std::string& path, int dim_s,
                             int dim_e) {
  const int joint_dim = dim_s * dim_e;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    ComplexMatrix u;
    if (s == "CNOT") {
      u = cnot();
    } else if (s == "SWAP") {
      u = swap_gate();
    } else if (s == "ISWAP") {
      u = iswap();
    } else if (s == "identity") {
      u = identity(joint_dim);
    } else {
      throw ConfigError(path + ": unknown dynamics name '" + s +
                        "' (expected CNOT, SWAP, ISWAP or identity)");
    }
    if (u.rows() != joint_dim) {
      throw ConfigError(path + ": gate '" + s + "' has dimension " +
                        std::to_string(u.rows()) + " != joint dimension " +
                        std::to_string(joint_dim));
    }
    return with_path(path, [&] { return JointDynamics::from_unitary(std::move(u)); });
  }
  if (j.is_object() && j.contains("factorized")) {
    const Json& f = j["factorized"];
    if (!f.is_object() || !f.contains("system") || !f.contains("environment")) {
      throw ConfigError(path + ".factorized: expected {\"system\": ..., \"environment\": ...}");
    }
    auto side = [&](const char* key, int dim) {
      const Json& spec = f[key];
      const std::string side_path = path + ".factorized." + key;
      ComplexMatrix u;
      if (spec.is_string()) {
        std::optional<ComplexMatrix> named = named_unitary_1q(spec.get<std::string>());
        if (!named) {
          throw ConfigError(side_path + ": unknown gate '" +
                            spec.get<std::string>() + "'");
        }
        u = *named;
      } else {
        u = parse_matrix_rows(spec, side_path);
      }
      if (u.rows() != dim) {
        throw ConfigError(side_path + ": dimension " + std::to_string(u.rows()) +
                          " != subsystem dimension " + std::to_string(dim));
      }
      return u;
    };
    ComplexMatrix u = tensor(side("system", dim_s), side("environment", dim_e));
    return with_path(path, [&] { return JointDynamics::from_unitary(std::move(u)); });
  }
  if (j.is_object() && j.contains("unitary")) {
    ComplexMatrix u = parse_matrix_rows(j["unitary"], path + ".unitary");
    if (u.rows() != joint_dim) {
      throw ConfigError(path + ".unitary: dimension " + std::to_string(u.rows()) +
                        " != joint dimension " + std::to_string(joint_dim));
    }
    return with_path(path, [&] { return JointDynamics::from_unitary(std::move(u)); });
  }
  if (j.is_object() && j.contains("hamiltonian")) {
    if (!j.contains("duration") || !j["duration"].is_number()) {
      throw ConfigError(path + ".duration: required with a hamiltonian");
    }
    ComplexMatrix h = parse_matrix_rows(j["hamiltonian"], path + ".hamiltonian");
    if (h.rows() != joint_dim) {
      throw ConfigError(path + ".hamiltonian: dimension " +
                        std::to_string(h.rows()) + " != joint dimension " +
                        std::to_string(joint_dim));
    }
    return with_path(path, [&] {
      return JointDynamics::from_hamiltonian(h, j["duration"].get<double>());
    });
  }
  throw ConfigError(path +
                    ": expected a gate name, {\"unitary\": ...}, {\"hamiltonian\": "
                    "..., \"duration\": ...} or {\"factorized\": ...}");
}

// ---------------------------------------------------------------------------
// Config loading
// ---------------------------------------------------------------------------

struct Loader {
  const Json& doc;
  std::vector<std::string> findings;
  ScenarioConfig config;
  int dim_s = 0;
  int dim_e = 0;

  explicit Loader(const Json& d) : doc(d) {}

  template <typename F>
  void guard(F&& f) {
    try {
      f();
    } catch (const Error& e) {
      findings.emplace_back(e.what());
    } catch (const nlohmann::json::exception& e) {
      findings.emplace_back(std::string("config: ") + e.what());
    }
  }

  void load() {
    if (!doc.is_object()) {
      findings.emplace_back("config: top level must be a JSON object");
      return;
    }
    check_keys();
    parse_meta();
    guard([&] { parse_initial_state(); });
    if (dim_s > 0) {
      guard([&] { parse_dynamics_field(); });
      guard([&] { parse_procedures(); });
      guard([&] { parse_basis(); });
      guard([&] { parse_observables(); });
      cross_checks();
    }
    config.echo = doc;
  }

  void check_keys() {
    static const std::vector<std::string> known = {
        "name",  "description", "initial_state", "dynamics",
        "procedures", "basis", "observables", "tolerances",
        "seed", "format", "trials"};
    for (const auto& item : doc.items()) {
      if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
        findings.emplace_back("config: unknown field '" + item.key() + "'");
      }
    }
  }

  void parse_meta() {
    config.name = "custom";
    guard([&] {
      if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
          throw ConfigError("name: expected a string");
        }
        config.name = doc["name"].get<std::string>();
      }
      if (doc.contains("description")) {
        if (!doc["description"].is_string()) {
          throw ConfigError("description: expected a string");
        }
        config.description = doc["description"].get<std::string>();
      }
    });

    guard([&] {
      if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) {
          throw ConfigError("seed: expected a non-negative integer");
        }
        config.seed = doc["seed"].get<std::uint64_t>();
      }
    });
    guard([&] {
      if (doc.contains("format")) {
        const std::string f = doc["format"].is_string()
                                  ? doc["format"].get<std::string>()
                                  : std::string();
        if (f != "human" && f != "json" && f != "csv") {
          throw ConfigError("format: expected 'human', 'json' or 'csv'");
        }
        config.format = f;
      }
    });
    guard([&] {
      if (doc.contains("trials")) {
        if (!doc["trials"].is_number_integer() || doc["trials"].get<int>() < 1) {
          throw ConfigError("trials: expected a positive integer");
        }
        config.trials = doc["trials"].get<int>();
      }
    });
    guard([&] {
      if (doc.contains("tolerances")) {
        const Json& t = doc["tolerances"];
        if (!t.is_object()) {
          throw ConfigError("tolerances: expected an object");
        }
        for (const auto& item : t.items()) {
          if (item.key() != "cp_threshold") {
            throw ConfigError("tolerances: unknown field '" + item.key() + "'");
          }
        }
        if (t.contains("cp_threshold")) {
          if (!t["cp_threshold"].is_number() ||
              t["cp_threshold"].get<double>() <= 0.0) {
            throw ConfigError("tolerances.cp_threshold: expected a positive number");
          }
          config.cp_threshold = t["cp_threshold"].get<double>();
        }
      }
    });
  }

  void parse_initial_state() {
    if (!doc.contains("initial_state")) {
      throw ConfigError("initial_state: required");
    }
    const Json& j = doc["initial_state"];
    const std::string path = "initial_state";
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      if (s == "bell_phi_plus") {
        config.initial_state = bell_phi_plus();
      } else if (std::optional<double> p = parse_parametrized(s, "werner", path)) {
        config.initial_state = with_path(path, [&] { return werner_family(*p); });
      } else if (s == "random correlated" || s == "random product") {
        config.random_family = s.substr(7);
      } else if (s.rfind("product ", 0) == 0) {
        std::istringstream tokens(s.substr(8));
        std::string sys_name;
        std::string env_name;
        if (!(tokens >> sys_name >> env_name) || !tokens.eof()) {
          throw ConfigError(path + ": expected 'product <system> <environment>'");
        }
        config.initial_state =
            product_state(parse_density(Json(sys_name), path + " (system)"),
                          parse_density(Json(env_name), path + " (environment)"));
      } else {
        throw ConfigError(path + ": unknown state '" + s +
                          "' (expected bell_phi_plus, werner p=<x>, product <s> "
                          "<e>, random correlated or random product)");
      }
    } else if (j.is_object() && j.contains("matrix")) {
      if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2 ||
          !j["dims"][0].is_number_integer() || !j["dims"][1].is_number_integer()) {
        throw ConfigError(path + ".dims: required as [dim_s, dim_e] with a matrix literal");
      }
      const int ds = j["dims"][0].get<int>();
      const int de = j["dims"][1].get<int>();
      config.initial_state = with_path(path, [&] {
        return BipartiteState(
            ds, de, DensityMatrix(parse_matrix_rows(j["matrix"], path + ".matrix")));
      });
    } else {
      throw ConfigError(path +
                        ": expected a named state or {\"matrix\": ..., \"dims\": [s, e]}");
    }

    if (config.initial_state) {
      dim_s = config.initial_state->dim_s();
      dim_e = config.initial_state->dim_e();
    } else {
      // Random sweep families are qubit-qubit.
      dim_s = 2;
      dim_e = 2;
    }
  }

  void parse_dynamics_field() {
    if (!doc.contains("dynamics")) {
      if (config.random_family.empty()) {
        throw ConfigError("dynamics: required for scenarios with a concrete initial state");
      }
      return;
    }
    config.dynamics = parse_dynamics(doc["dynamics"], "dynamics", dim_s, dim_e);
  }

  void parse_procedures() {
    if (!doc.contains("procedures") || !doc["procedures"].is_array() ||
        doc["procedures"].empty()) {
      throw ConfigError("procedures: required as a nonempty array");
    }
    const Json& list = doc["procedures"];
    for (std::size_t i = 0; i < list.size(); ++i) {
      guard([&] { parse_procedure(list[i], i); });
    }
  }

  void parse_procedure(const Json& j, std::size_t index) {
    const std::string path = "procedures[" + std::to_string(index) + "]";
    if (!j.is_object()) {
      throw ConfigError(path + ": expected an object");
    }
    const std::string kind = j.value("kind", std::string());
    ProcedureSpec spec;
    spec.kind = kind;
    spec.name = j.value("name", kind.empty() ? ("procedure" + std::to_string(index))
                                             : kind);
    if (kind == "projective") {
      if (!j.contains("projectors") || !j["projectors"].is_array() ||
          j["projectors"].empty()) {
        throw ConfigError(path + ".projectors: required as a nonempty array");
      }
      ProjectivePreparation prep;
      for (std::size_t m = 0; m < j["projectors"].size(); ++m) {
        const std::string p_path =
            path + ".projectors[" + std::to_string(m) + "]";
        DensityMatrix p = parse_density(j["projectors"][m], p_path);
        if (p.dim() != dim_s) {
          throw ConfigError(p_path + ": dimension " + std::to_string(p.dim()) +
                            " != system dimension " + std::to_string(dim_s));
        }
        const ComplexMatrix& m_ = p.matrix();
        if ((m_ * m_ - m_).cwiseAbs().maxCoeff() > tol::structural) {
          throw ConfigError(p_path + ": not a rank-1 projector (P^2 != P)");
        }
        prep.projectors.push_back(std::move(p));
      }
      spec.procedure = std::move(prep);
    } else if (kind == "stochastic") {
      if (!j.contains("pin")) {
        throw ConfigError(path + ".pin: required");
      }
      PureStateVector pin = parse_pure(j["pin"], path + ".pin");
      if (pin.dim() != dim_s) {
        throw ConfigError(path + ".pin: dimension " + std::to_string(pin.dim()) +
                          " != system dimension " + std::to_string(dim_s));
      }
      if (!j.contains("rotations") || !j["rotations"].is_array() ||
          j["rotations"].empty()) {
        throw ConfigError(path + ".rotations: required as a nonempty array");
      }
      StochasticPreparation prep{std::move(pin), {}};
      for (std::size_t m = 0; m < j["rotations"].size(); ++m) {
        const std::string r_path = path + ".rotations[" + std::to_string(m) + "]";
        KrausChannel rotation = parse_channel(j["rotations"][m], r_path, dim_s);
        if (!rotation.is_trace_preserving()) {
          throw ConfigError(r_path + ": rotation must be trace preserving");
        }
        prep.rotations.push_back(std::move(rotation));
      }
      spec.procedure = std::move(prep);
    } else if (kind == "multipin") {
      if (!j.contains("pins") || !j["pins"].is_array() || j["pins"].empty()) {
        throw ConfigError(path + ".pins: required as a nonempty array");
      }
      MultiPinPreparation prep;
      for (std::size_t m = 0; m < j["pins"].size(); ++m) {
        const std::string pin_path = path + ".pins[" + std::to_string(m) + "]";
        const Json& pin_j = j["pins"][m];
        if (!pin_j.is_object() || !pin_j.contains("state")) {
          throw ConfigError(pin_path + ": expected {\"state\": ..., \"env_action\": ...}");
        }
        PureStateVector target = parse_pure(pin_j["state"], pin_path + ".state");
        if (target.dim() != dim_s) {
          throw ConfigError(pin_path + ".state: dimension mismatch with the system");
        }
        KrausChannel action =
            pin_j.contains("env_action")
                ? parse_channel(pin_j["env_action"], pin_path + ".env_action",
                                dim_e)
                : identity_channel(dim_e);
        if (!action.is_trace_preserving()) {
          throw ConfigError(pin_path + ".env_action: must be trace preserving");
        }
        prep.pins.push_back(
            MultiPinPreparation::Pin{std::move(target), std::move(action)});
      }
      spec.procedure = std::move(prep);
    } else {
      throw ConfigError(path + ".kind: expected 'projective', 'stochastic' or "
                        "'multipin', got '" + kind + "'");
    }
    config.procedures.push_back(std::move(spec));
  }

  void parse_basis() {
    if (!doc.contains("basis") || doc["basis"].is_null()) {
      return;
    }
    if (!config.random_family.empty()) {
      throw ConfigError("basis: tomography is not run for random-sweep scenarios");
    }
    const Json& list = doc["basis"];
    if (!list.is_array() || list.empty()) {
      throw ConfigError("basis: expected a nonempty array of states");
    }
    std::vector<DensityMatrix> inputs;
    for (std::size_t m = 0; m < list.size(); ++m) {
      const std::string b_path = "basis[" + std::to_string(m) + "]";
      DensityMatrix state = parse_density(list[m], b_path);
      if (state.dim() != dim_s) {
        throw ConfigError(b_path + ": dimension " + std::to_string(state.dim()) +
                          " != system dimension " + std::to_string(dim_s));
      }
      inputs.push_back(std::move(state));
    }
    config.basis = with_path("basis", [&] { return TomographyBasis(std::move(inputs)); });
  }

  void parse_observables() {
    if (!doc.contains("observables")) {
      return;
    }
    const Json& list = doc["observables"];
    if (!list.is_array()) {
      throw ConfigError("observables: expected an array");
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string o_path = "observables[" + std::to_string(k) + "]";
      guard([&] {
        const Json& j = list[k];
        if (j.is_string()) {
          const std::string s = j.get<std::string>();
          std::optional<ComplexMatrix> named = named_unitary_1q(s);
          if (!named || !is_hermitian(*named)) {
            throw ConfigError(o_path + ": unknown observable '" + s +
                              "' (expected I, X, Y or Z)");
          }
          if (named->rows() != dim_s) {
            throw ConfigError(o_path + ": dimension mismatch with the system");
          }
          config.observables.push_back(Observable(*named));
          config.observable_labels.push_back(s);
        } else if (j.is_object() && j.contains("matrix")) {
          Observable obs = with_path(o_path, [&] {
            return Observable(parse_matrix_rows(j["matrix"], o_path + ".matrix"));
          });
          if (obs.dim() != dim_s) {
            throw ConfigError(o_path + ": dimension mismatch with the system");
          }
          config.observables.push_back(std::move(obs));
          config.observable_labels.push_back(
              j.value("label", "obs" + std::to_string(k)));
        } else {
          throw ConfigError(o_path + ": expected a name or {\"matrix\": ...}");
        }
      });
    }
  }

  void cross_checks() {
    guard([&] {
      if (config.trials > 1 && config.random_family.empty()) {
        throw ConfigError("trials: repeated trials require a random initial_state family");
      }
    });
    guard([&] {
      if (config.basis) {
        for (const ProcedureSpec& spec : config.procedures) {
          if (input_count(spec.procedure) != config.basis->size()) {
            throw ConfigError("procedures: '" + spec.name + "' provides " +
                              std::to_string(input_count(spec.procedure)) +
                              " inputs for a basis of " +
                              std::to_string(config.basis->size()));
          }
          std::vector<DensityMatrix> delivered = procedure_inputs(spec.procedure);
          for (std::size_t m = 0; m < delivered.size(); ++m) {
            const double gap =
                trace_distance(delivered[m], config.basis->inputs()[m]);
            if (gap > tol::structural) {
              throw ConfigError(
                  "procedures: '" + spec.name + "' input " + std::to_string(m) +
                  " is at trace distance " + std::to_string(gap) +
                  " from the declared basis input");
            }
          }
        }
      }
    });
  }
};

// ---------------------------------------------------------------------------
// Built-in catalog
// ---------------------------------------------------------------------------

struct Builtin {
  const char* name;
  const char* text;
};

const Builtin kBuiltins[] = {
    {"motivation", R"json({
  "name": "motivation",
  "description": "Projective vs stochastic preparation of {x+, y+} on a maximally correlated state: the surviving environment remembers which procedure ran.",
  "initial_state": "werner p=1.0",
  "dynamics": "CNOT",
  "procedures": [
    {"name": "projective", "kind": "projective", "projectors": ["x+", "y+"]},
    {"name": "stochastic", "kind": "stochastic", "pin": "x+", "rotations": ["I", "S"]}
  ],
  "observables": ["X", "Y", "Z"],
  "seed": 0,
  "format": "human"
})json"},
    {"uncorrelated", R"json({
  "name": "uncorrelated",
  "description": "Product initial state: every preparation procedure leaves the environment alone and every reconstructed map is CP.",
  "initial_state": "product mixed z+",
  "dynamics": "CNOT",
  "basis": ["z+", "z-", "x+", "y+"],
  "procedures": [
    {"name": "projective", "kind": "projective", "projectors": ["z+", "z-", "x+", "y+"]},
    {"name": "stochastic", "kind": "stochastic", "pin": "z+", "rotations": ["I", "X", "H", "SH"]},
    {"name": "multipin", "kind": "multipin", "pins": [
      {"state": "z+", "env_action": "I"},
      {"state": "z-", "env_action": "I"},
      {"state": "x+", "env_action": "I"},
      {"state": "y+", "env_action": "I"}
    ]}
  ],
  "observables": ["X", "Y", "Z"],
  "seed": 0,
  "format": "human"
})json"},
    {"tomography-cp-violation", R"json({
  "name": "tomography-cp-violation",
  "description": "Bell-correlated state with CNOT dynamics: projective preparation reconstructs a non-CP process map, stochastic preparation a CPTP one.",
  "initial_state": "bell_phi_plus",
  "dynamics": "CNOT",
  "basis": ["z+", "z-", "x+", "y+"],
  "procedures": [
    {"name": "projective", "kind": "projective", "projectors": ["z+", "z-", "x+", "y+"]},
    {"name": "stochastic", "kind": "stochastic", "pin": "z+", "rotations": ["I", "X", "H", "SH"]}
  ],
  "observables": ["X", "Y", "Z"],
  "seed": 0,
  "format": "human"
})json"},
    {"multipin-direct-action", R"json({
  "name": "multipin-direct-action",
  "description": "Two pin maps differing only in their direct environment action split an uncorrelated environment to trace distance 1.",
  "initial_state": "product mixed z+",
  "dynamics": "CNOT",
  "procedures": [
    {"name": "multipin", "kind": "multipin", "pins": [
      {"state": "z+", "env_action": "I"},
      {"state": "z+", "env_action": "X"}
    ]}
  ],
  "observables": ["X", "Y", "Z"],
  "seed": 0,
  "format": "human"
})json"},
    {"markov-limit", R"json({
  "name": "markov-limit",
  "description": "Correlated state under factorized (non-interacting) dynamics: projective and stochastic preparations give identical system outputs and CPTP maps.",
  "initial_state": "werner p=0.8",
  "dynamics": {"factorized": {"system": "H", "environment": "T"}},
  "basis": ["z+", "z-", "x+", "y+"],
  "procedures": [
    {"name": "projective", "kind": "projective", "projectors": ["z+", "z-", "x+", "y+"]},
    {"name": "stochastic", "kind": "stochastic", "pin": "z+", "rotations": ["I", "X", "H", "SH"]}
  ],
  "observables": ["X", "Y", "Z"],
  "seed": 0,
  "format": "human"
})json"},
    {"stochastic-constancy-sweep", R"json({
  "name": "stochastic-constancy-sweep",
  "description": "Seeded random correlated states: the stochastic environment factor is input-independent in every trial.",
  "initial_state": "random correlated",
  "trials": 100,
  "procedures": [
    {"name": "stochastic", "kind": "stochastic", "pin": "z+", "rotations": ["I", "X", "H", "SH"]}
  ],
  "seed": 20260808,
  "format": "human"
})json"},
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

Json complex_json(Complex z) {
  return Json::array({z.real(), z.imag()});
}

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json report_json(const ScenarioReport& report) {
  Json j;
  j["tool"] = Json{{"name", "prepsim"}, {"version", kVersion}};
  j["scenario"] = report.scenario;
  j["status"] = report.all_ok ? "ok" : "partial-failure";
  j["config"] = report.config_echo;

  Json procedures = Json::array();
  for (const ProcedureResult& proc : report.procedures) {
    Json p;
    p["name"] = proc.name;
    p["kind"] = proc.kind;
    p["status"] = proc.ok ? "ok" : "error";
    p["error"] = proc.ok ? Json(nullptr) : Json(proc.error);
    p["environment_dependence"] = proc.environment_dependence
                                      ? Json(*proc.environment_dependence)
                                      : Json(nullptr);
    Json inputs = Json::array();
    for (const InputResult& input : proc.inputs) {
      Json in;
      in["label"] = input.label;
      in["probability"] = input.probability;
      in["environment_state"] = matrix_json(input.environment_state);
      Json expectations = Json::object();
      for (std::size_t k = 0; k < input.expectations.size(); ++k) {
        expectations[report.observable_labels[k]] = input.expectations[k];
      }
      in["expectations"] = std::move(expectations);
      inputs.push_back(std::move(in));
    }
    p["inputs"] = std::move(inputs);
    if (proc.diagnosis) {
      p["diagnosis"] = Json{{"choi_min_eigenvalue", proc.diagnosis->choi_min_eigenvalue},
                            {"is_cp", proc.diagnosis->is_cp},
                            {"tp_deviation", proc.diagnosis->tp_deviation},
                            {"linearity_residual", proc.diagnosis->linearity_residual}};
    } else {
      p["diagnosis"] = nullptr;
    }
    if (proc.sweep) {
      p["sweep"] = Json{{"trials", proc.sweep->trials},
                        {"max_environment_dependence", proc.sweep->max_environment_dependence},
                        {"mean_environment_dependence", proc.sweep->mean_environment_dependence}};
    } else {
      p["sweep"] = nullptr;
    }
    procedures.push_back(std::move(p));
  }
  j["procedures"] = std::move(procedures);

  Json pairwise = Json::array();
  for (const PairwiseResult& pair : report.pairwise) {
    Json p;
    p["a"] = pair.proc_a;
    p["b"] = pair.proc_b;
    p["per_input"] = pair.per_input_distance;
    p["max"] = pair.max_distance;
    pairwise.push_back(std::move(p));
  }
  j["pairwise_output_distances"] = std::move(pairwise);
  return j;
}

std::string complex_human(Complex z) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g%+.6gi", z.real(), z.imag());
  return buffer;
}

std::string matrix_human(const ComplexMatrix& m) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += (r == 0) ? "[" : " [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out += complex_human(m(r, c));
      if (c + 1 < m.cols()) {
        out += ", ";
      }
    }
    out += "]";
    if (r + 1 < m.rows()) {
      out += ";";
    }
  }
  out += "]";
  return out;
}

std::string render_human(const ScenarioReport& report) {
  std::ostringstream out;
  char line[256];
  out << "prepsim " << kVersion << " -- scenario '" << report.scenario << "'\n";
  out << "status: " << (report.all_ok ? "ok" : "partial-failure") << "\n";

  for (const ProcedureResult& proc : report.procedures) {
    out << "\nprocedure '" << proc.name << "' (" << proc.kind << ")\n";
    if (!proc.ok) {
      out << "  error: " << proc.error << "\n";
      continue;
    }
    if (proc.sweep) {
      std::snprintf(line, sizeof(line),
                    "  sweep over %d trials: environment dependence max %.3e, "
                    "mean %.3e\n",
                    proc.sweep->trials, proc.sweep->max_environment_dependence,
                    proc.sweep->mean_environment_dependence);
      out << line;
      continue;
    }
    out << "  input  probability";
    for (const std::string& label : report.observable_labels) {
      std::snprintf(line, sizeof(line), "  %10s", ("<" + label + ">").c_str());
      out << line;
    }
    out << "\n";
    for (const InputResult& input : proc.inputs) {
      std::snprintf(line, sizeof(line), "  %-5d  %11.9f", input.label,
                    input.probability);
      out << line;
      for (double o : input.expectations) {
        std::snprintf(line, sizeof(line), "  %10.6f", o);
        out << line;
      }
      out << "\n";
    }
    out << "  environment states:\n";
    for (const InputResult& input : proc.inputs) {
      out << "    input " << input.label << ": "
          << matrix_human(input.environment_state) << "\n";
    }
    if (proc.environment_dependence) {
      std::snprintf(line, sizeof(line), "  environment dependence: %.9e\n",
                    *proc.environment_dependence);
      out << line;
    }
    if (proc.diagnosis) {
      std::snprintf(line, sizeof(line),
                    "  process map: choi_min_eigenvalue %.9e, %s, tp_deviation "
                    "%.3e, linearity_residual %.3e\n",
                    proc.diagnosis->choi_min_eigenvalue,
                    proc.diagnosis->is_cp ? "CP" : "NOT CP",
                    proc.diagnosis->tp_deviation,
                    proc.diagnosis->linearity_residual);
      out << line;
    }
  }

  if (!report.pairwise.empty()) {
    out << "\npairwise system-output trace distances\n";
    for (const PairwiseResult& pair : report.pairwise) {
      out << "  " << pair.proc_a << " vs " << pair.proc_b << ":";
      for (std::size_t m = 0; m < pair.per_input_distance.size(); ++m) {
        std::snprintf(line, sizeof(line), " %.6g", pair.per_input_distance[m]);
        out << line;
      }
      std::snprintf(line, sizeof(line), "  (max %.9g)\n", pair.max_distance);
      out << line;
    }
  }
  return out.str();
}

std::string render_csv(const ScenarioReport& report) {
  std::string out = "procedure,input,probability";
  for (const std::string& label : report.observable_labels) {
    out += "," + label;
  }
  out += "\n";
  for (const ProcedureResult& proc : report.procedures) {
    if (!proc.ok || proc.sweep) {
      continue;
    }
    for (const InputResult& input : proc.inputs) {
      out += proc.name + "," + std::to_string(input.label) + "," +
             format_double(input.probability);
      for (double o : input.expectations) {
        out += "," + format_double(o);
      }
      out += "\n";
    }
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> list_scenarios() {
  std::vector<std::pair<std::string, std::string>> catalog;
  for (const Builtin& builtin : kBuiltins) {
    Json doc = Json::parse(builtin.text);
    catalog.emplace_back(builtin.name, doc.value("description", std::string()));
  }
  return catalog;
}

Json builtin_scenario(const std::string& name) {
  for (const Builtin& builtin : kBuiltins) {
    if (name == builtin.name) {
      return Json::parse(builtin.text);
    }
  }
  throw ConfigError("unknown built-in scenario '" + name +
                    "'; run 'prepsim list' for the catalog");
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line and column from the byte offset for a usable message.
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError(source + ":" + std::to_string(line) + ":" +
                      std::to_string(column) + ": " + e.what());
  }
}

std::vector<std::string> validate_scenario(const Json& doc) {
  Loader loader(doc);
  loader.load();
  return loader.findings;
}

ScenarioConfig parse_scenario(const Json& doc) {
  Loader loader(doc);
  loader.load();
  if (!loader.findings.empty()) {
    std::string joined = "config validation failed:";
    for (const std::string& finding : loader.findings) {
      joined += "\n  - " + finding;
    }
    throw ConfigError(joined);
  }
  return std::move(loader.config);
}

namespace {

ProcedureResult run_single(const ScenarioConfig& config,
                           const ProcedureSpec& spec,
                           const BipartiteState& initial,
                           std::vector<DensityMatrix>* outputs) {
  ProcedureResult result;
  result.name = spec.name;
  result.kind = spec.kind;

  std::vector<PreparationOutcome> outcomes = run_procedure(initial, spec.procedure);
  for (const PreparationOutcome& outcome : outcomes) {
    DensityMatrix out = system_output(outcome.prepared, *config.dynamics);
    InputResult input;
    input.label = outcome.input_label;
    input.probability = outcome.probability;
    input.environment_state = reduce_environment(outcome.prepared).matrix();
    for (const Observable& obs : config.observables) {
      input.expectations.push_back(
          (obs.matrix() * out.matrix()).trace().real());
    }
    result.inputs.push_back(std::move(input));
    outputs->push_back(std::move(out));
  }
  if (outcomes.size() >= 2) {
    result.environment_dependence = environment_dependence(outcomes);
  }
  if (config.basis) {
    std::vector<ExperimentRecord> records =
        run_pipeline(initial, spec.procedure, *config.dynamics, *config.basis,
                     config.observables);
    ProcessDiagnosis verdict = diagnose(reconstruct_process(records), records);
    result.diagnosis = DiagnosisResult{
        verdict.choi_min_eigenvalue,
        verdict.choi_min_eigenvalue >= -config.cp_threshold,
        verdict.tp_deviation, verdict.linearity_residual};
  }
  return result;
}

ScenarioReport run_sweep(const ScenarioConfig& config) {
  ScenarioReport report;
  report.scenario = config.name;
  report.config_echo = config.echo;
  report.observable_labels = config.observable_labels;

  Rng rng(config.seed);
  std::vector<ProcedureResult> results;
  for (const ProcedureSpec& spec : config.procedures) {
    ProcedureResult r;
    r.name = spec.name;
    r.kind = spec.kind;
    r.sweep = SweepResult{0, 0.0, 0.0};
    results.push_back(std::move(r));
  }

  for (int trial = 0; trial < config.trials; ++trial) {
    BipartiteState state = (config.random_family == "correlated")
                               ? random_correlated_state(2, 2, rng)
                               : random_product_state(2, 2, rng);
    for (ProcedureResult& result : results) {
      if (!result.ok) {
        continue;
      }
      const ProcedureSpec& spec =
          config.procedures[static_cast<std::size_t>(&result - results.data())];
      try {
        std::vector<PreparationOutcome> outcomes =
            run_procedure(state, spec.procedure);
        const double dependence = outcomes.size() >= 2
                                      ? environment_dependence(outcomes)
                                      : 0.0;
        result.sweep->trials += 1;
        result.sweep->max_environment_dependence =
            std::max(result.sweep->max_environment_dependence, dependence);
        result.sweep->mean_environment_dependence += dependence;
      } catch (const Error& e) {
        result.ok = false;
        result.error = "trial " + std::to_string(trial) + ": " + e.what();
        result.sweep.reset();
        report.all_ok = false;
      }
    }
  }
  for (ProcedureResult& result : results) {
    if (result.sweep && result.sweep->trials > 0) {
      result.sweep->mean_environment_dependence /= result.sweep->trials;
    }
    report.procedures.push_back(std::move(result));
  }
  return report;
}

} // namespace

ScenarioReport run_scenario(const ScenarioConfig& config) {
  if (!config.random_family.empty()) {
    return run_sweep(config);
  }

  ScenarioReport report;
  report.scenario = config.name;
  report.config_echo = config.echo;
  report.observable_labels = config.observable_labels;

  const BipartiteState& initial = *config.initial_state;
  std::vector<std::optional<std::vector<DensityMatrix>>> outputs_per_proc;

  for (const ProcedureSpec& spec : config.procedures) {
    std::vector<DensityMatrix> outputs;
    try {
      report.procedures.push_back(run_single(config, spec, initial, &outputs));
      outputs_per_proc.emplace_back(std::move(outputs));
    } catch (const Error& e) {
      ProcedureResult failed;
      failed.name = spec.name;
      failed.kind = spec.kind;
      failed.ok = false;
      failed.error = e.what();
      report.procedures.push_back(std::move(failed));
      outputs_per_proc.emplace_back(std::nullopt);
      report.all_ok = false;
    }
  }

  for (std::size_t i = 0; i < outputs_per_proc.size(); ++i) {
    for (std::size_t j = i + 1; j < outputs_per_proc.size(); ++j) {
      if (!outputs_per_proc[i] || !outputs_per_proc[j] ||
          outputs_per_proc[i]->size() != outputs_per_proc[j]->size()) {
        continue;
      }
      PairwiseResult pair;
      pair.proc_a = config.procedures[i].name;
      pair.proc_b = config.procedures[j].name;
      for (std::size_t m = 0; m < outputs_per_proc[i]->size(); ++m) {
        const double d =
            trace_distance((*outputs_per_proc[i])[m], (*outputs_per_proc[j])[m]);
        pair.per_input_distance.push_back(d);
        pair.max_distance = std::max(pair.max_distance, d);
      }
      report.pairwise.push_back(std::move(pair));
    }
  }
  return report;
}

std::string render_report(const ScenarioReport& report,
                          const std::string& format) {
  if (format == "json") {
    return report_json(report).dump(2) + "\n";
  }
  if (format == "csv") {
    return render_csv(report);
  }
  if (format == "human") {
    return render_human(report);
  }
  throw ConfigError("format: expected 'human', 'json' or 'csv', got '" +
                    format + "'");
}

} // namespace prepsim
