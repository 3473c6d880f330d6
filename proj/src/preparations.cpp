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

#include "prepsim/preparations.hpp"

#include <string>
#include <utility>

namespace prepsim {

namespace {

void require_rank_one_projector(const DensityMatrix& p) {
  const ComplexMatrix& m = p.matrix();
  const double idem = (m * m - m).cwiseAbs().maxCoeff();
  if (idem > tol::structural) {
    throw ContractViolation("prepare_projective: projector fails P^2 = P by " +
                            std::to_string(idem));
  }
  // Idempotent with unit trace forces rank 1; DensityMatrix already enforces
  // the unit trace. Higher-rank projective preparation would deliver
  // (P rho P)/a instead of a fixed pure input and is rejected outright.
}

void require_trace_preserving(const KrausChannel& c, const char* what) {
  if (!c.is_trace_preserving()) {
    throw ContractViolation(std::string(what) +
                            ": channel deviates from trace preservation by " +
                            std::to_string(c.trace_preservation_deviation()));
  }
}

} // namespace

PreparationOutcome prepare_projective(const BipartiteState& rho_se,
                                      const DensityMatrix& p_m, int label) {
  if (p_m.dim() != rho_se.dim_s()) {
    throw DimensionError("prepare_projective: projector dimension " +
                         std::to_string(p_m.dim()) + " != system dimension " +
                         std::to_string(rho_se.dim_s()));
  }
  require_rank_one_projector(p_m);

  ComplexMatrix projector = tensor(p_m.matrix(), identity(rho_se.dim_e()));
  const ComplexMatrix& joint = rho_se.joint().matrix();
  const double a = (projector * joint).trace().real();
  if (a <= tol::probability_floor) {
    throw ImpossiblePreparation(
        "prepare_projective: success probability " + std::to_string(a) +
        " for input " + std::to_string(label) +
        " is below the numerical floor; this projection never succeeds");
  }
  ComplexMatrix sandwiched = (projector * joint * projector) / a;
  return PreparationOutcome{
      BipartiteState(rho_se.dim_s(), rho_se.dim_e(),
                     DensityMatrix(std::move(sandwiched))),
      a, label};
}

PreparationOutcome prepare_pin(const BipartiteState& rho_se,
                               const PureStateVector& phi, int label) {
  if (phi.dim() != rho_se.dim_s()) {
    throw DimensionError("prepare_pin: pin state dimension " +
                         std::to_string(phi.dim()) + " != system dimension " +
                         std::to_string(rho_se.dim_s()));
  }
  DensityMatrix env = reduce_environment(rho_se);
  return PreparationOutcome{product_state(pure_density(phi), env), 1.0, label};
}

PreparationOutcome prepare_stochastic(const BipartiteState& rho_se,
                                      const PureStateVector& phi,
                                      const KrausChannel& omega_m, int label) {
  if (phi.dim() != rho_se.dim_s()) {
    throw DimensionError("prepare_stochastic: pin state dimension " +
                         std::to_string(phi.dim()) + " != system dimension " +
                         std::to_string(rho_se.dim_s()));
  }
  if (omega_m.dim() != rho_se.dim_s()) {
    throw DimensionError("prepare_stochastic: rotation dimension " +
                         std::to_string(omega_m.dim()) +
                         " != system dimension " +
                         std::to_string(rho_se.dim_s()));
  }
  require_trace_preserving(omega_m, "prepare_stochastic");

  DensityMatrix system(apply_kraus(omega_m, pure_density(phi).matrix()));
  DensityMatrix env = reduce_environment(rho_se);
  return PreparationOutcome{product_state(system, env), 1.0, label};
}

PreparationOutcome prepare_multipin(const BipartiteState& rho_se,
                                    const PureStateVector& pin_m,
                                    const KrausChannel& q_m, int label) {
  if (pin_m.dim() != rho_se.dim_s()) {
    throw DimensionError("prepare_multipin: pin state dimension " +
                         std::to_string(pin_m.dim()) + " != system dimension " +
                         std::to_string(rho_se.dim_s()));
  }
  if (q_m.dim() != rho_se.dim_e()) {
    throw DimensionError("prepare_multipin: environment action dimension " +
                         std::to_string(q_m.dim()) +
                         " != environment dimension " +
                         std::to_string(rho_se.dim_e()));
  }
  require_trace_preserving(q_m, "prepare_multipin");

  DensityMatrix env(apply_kraus(q_m, reduce_environment(rho_se).matrix()));
  return PreparationOutcome{product_state(pure_density(pin_m), env), 1.0,
                            label};
}

int input_count(const PreparationProcedure& proc) {
  return std::visit(
      [](const auto& p) -> int {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ProjectivePreparation>) {
          return static_cast<int>(p.projectors.size());
        } else if constexpr (std::is_same_v<T, StochasticPreparation>) {
          return static_cast<int>(p.rotations.size());
        } else {
          return static_cast<int>(p.pins.size());
        }
      },
      proc);
}

std::vector<DensityMatrix> procedure_inputs(const PreparationProcedure& proc) {
  return std::visit(
      [](const auto& p) -> std::vector<DensityMatrix> {
        using T = std::decay_t<decltype(p)>;
        std::vector<DensityMatrix> inputs;
        if constexpr (std::is_same_v<T, ProjectivePreparation>) {
          inputs = p.projectors;
        } else if constexpr (std::is_same_v<T, StochasticPreparation>) {
          DensityMatrix pinned = pure_density(p.pin_target);
          for (const KrausChannel& omega : p.rotations) {
            inputs.emplace_back(apply_kraus(omega, pinned.matrix()));
          }
        } else {
          for (const auto& pin : p.pins) {
            inputs.push_back(pure_density(pin.target));
          }
        }
        return inputs;
      },
      proc);
}

std::vector<PreparationOutcome> run_procedure(const BipartiteState& rho_se,
                                              const PreparationProcedure& proc) {
  return std::visit(
      [&rho_se](const auto& p) -> std::vector<PreparationOutcome> {
        using T = std::decay_t<decltype(p)>;
        std::vector<PreparationOutcome> outcomes;
        if constexpr (std::is_same_v<T, ProjectivePreparation>) {
          for (std::size_t m = 0; m < p.projectors.size(); ++m) {
            outcomes.push_back(prepare_projective(rho_se, p.projectors[m],
                                                  static_cast<int>(m)));
          }
        } else if constexpr (std::is_same_v<T, StochasticPreparation>) {
          for (std::size_t m = 0; m < p.rotations.size(); ++m) {
            outcomes.push_back(prepare_stochastic(rho_se, p.pin_target,
                                                  p.rotations[m],
                                                  static_cast<int>(m)));
          }
        } else {
          for (std::size_t m = 0; m < p.pins.size(); ++m) {
            outcomes.push_back(prepare_multipin(rho_se, p.pins[m].target,
                                                p.pins[m].env_action,
                                                static_cast<int>(m)));
          }
        }
        return outcomes;
      },
      proc);
}

double environment_dependence(
    const std::vector<PreparationOutcome>& outcomes) {
  if (outcomes.size() < 2) {
    throw DomainError("environment_dependence: needs at least two outcomes, got " +
                      std::to_string(outcomes.size()));
  }
  std::vector<DensityMatrix> envs;
  envs.reserve(outcomes.size());
  for (const PreparationOutcome& o : outcomes) {
    envs.push_back(reduce_environment(o.prepared));
  }
  double max_distance = 0.0;
  for (std::size_t i = 0; i < envs.size(); ++i) {
    for (std::size_t j = i + 1; j < envs.size(); ++j) {
      max_distance = std::max(max_distance, trace_distance(envs[i], envs[j]));
    }
  }
  return max_distance;
}

ComplexMatrix rotation_mapping(const PureStateVector& from,
                               const PureStateVector& to) {
  if (from.dim() != to.dim()) {
    throw DimensionError("rotation_mapping: state dimensions differ");
  }
  const int d = from.dim();

  // Complete a vector to an orthonormal basis by Gram-Schmidt against the
  // standard basis, skipping directions it already spans.
  auto completion = [d](const ComplexVector& v) {
    ComplexMatrix basis(d, d);
    basis.col(0) = v;
    int filled = 1;
    for (int k = 0; k < d && filled < d; ++k) {
      ComplexVector candidate = ComplexVector::Zero(d);
      candidate(k) = 1.0;
      for (int c = 0; c < filled; ++c) {
        candidate -= basis.col(c) * (basis.col(c).adjoint() * candidate)(0);
      }
      const double norm = candidate.norm();
      if (norm > 1e-8) {
        basis.col(filled++) = candidate / norm;
      }
    }
    return basis;
  };

  ComplexMatrix u = completion(to.amplitudes()) *
                    completion(from.amplitudes()).adjoint();
  return u;
}

} // namespace prepsim
