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

#include <variant>
#include <vector>

#include "prepsim/channels.hpp"
#include "prepsim/states.hpp"

namespace prepsim {

// Three ways an experimenter can turn an unknown joint state into a known
// system input, with very different consequences for the environment:
//
//  - Projective: measure the system with a rank-1 projector and keep the
//    matching outcomes. Succeeds with probability a_m; on a correlated joint
//    state the surviving environment depends on which projector was used.
//  - Stochastic: pin the system to a fixed pure state (trace-and-replace),
//    then rotate it locally into the desired input. Deterministic, and the
//    environment is left in the same reduced state for every input.
//  - MultiPin: a separate pin map per input, each allowed to act on the
//    environment directly; the environment becomes input-dependent even
//    without initial correlations.

/// Rank-1 system projectors P_m, one per input.
struct ProjectivePreparation {
  std::vector<DensityMatrix> projectors;
};

/// One pin target and a trace-preserving local rotation per input.
struct StochasticPreparation {
  PureStateVector pin_target;
  std::vector<KrausChannel> rotations;
};

/// Per-input pin target plus a trace-preserving action on the environment.
struct MultiPinPreparation {
  struct Pin {
    PureStateVector target;
    KrausChannel env_action;
  };
  std::vector<Pin> pins;
};

using PreparationProcedure =
    std::variant<ProjectivePreparation, StochasticPreparation,
                 MultiPinPreparation>;

/// Result of preparing one input: the post-preparation joint state, the
/// probability the preparation succeeds, and which input it realizes.
struct PreparationOutcome {
  BipartiteState prepared;
  double probability = 0.0;
  int input_label = 0;
};

// ---------------------------------------------------------------------------
// Single-input preparations
// ---------------------------------------------------------------------------

/// (P (x) I) rho (P (x) I) / a with a = Tr[(P (x) I) rho]. Requires a rank-1
/// projector; throws ImpossiblePreparation when a falls below the
/// probability floor.
PreparationOutcome prepare_projective(const BipartiteState& rho_se,
                                      const DensityMatrix& p_m, int label = 0);

/// Pin map: |Phi><Phi| (x) Tr_S[rho]. Deterministic, decorrelating.
PreparationOutcome prepare_pin(const BipartiteState& rho_se,
                               const PureStateVector& phi, int label = 0);

/// Pin map followed by a local trace-preserving rotation of the system:
/// Omega(|Phi><Phi|) (x) Tr_S[rho].
PreparationOutcome prepare_stochastic(const BipartiteState& rho_se,
                                      const PureStateVector& phi,
                                      const KrausChannel& omega_m,
                                      int label = 0);

/// Per-input pin with a direct environment action:
/// |Phi_m><Phi_m| (x) Q_m(Tr_S[rho]).
PreparationOutcome prepare_multipin(const BipartiteState& rho_se,
                                    const PureStateVector& pin_m,
                                    const KrausChannel& q_m, int label = 0);

// ---------------------------------------------------------------------------
// Procedure-level helpers
// ---------------------------------------------------------------------------

/// Number of inputs the procedure realizes.
int input_count(const PreparationProcedure& proc);

/// The system states the procedure is meant to deliver, one per input.
std::vector<DensityMatrix> procedure_inputs(const PreparationProcedure& proc);

/// Runs every input of the procedure against the same initial state.
std::vector<PreparationOutcome> run_procedure(const BipartiteState& rho_se,
                                              const PreparationProcedure& proc);

/// Maximum pairwise trace distance between the post-preparation environment
/// states. Zero means the environment is procedure-independent; requires at
/// least two outcomes.
double environment_dependence(const std::vector<PreparationOutcome>& outcomes);

/// Unitary sending |from> to |to| (up to global phase), built by completing
/// each vector to an orthonormal basis. Handy for realizing stochastic
/// rotations from target states.
ComplexMatrix rotation_mapping(const PureStateVector& from,
                               const PureStateVector& to);

} // namespace prepsim
