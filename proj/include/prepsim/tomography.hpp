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

#include <vector>

#include "prepsim/channels.hpp"
#include "prepsim/dynamics.hpp"
#include "prepsim/preparations.hpp"

namespace prepsim {

/// Input states spanning the system operator space (d^2 of them for full
/// reconstruction). Construction rejects sets whose vectorized inputs are
/// rank-deficient.
class TomographyBasis {
public:
  explicit TomographyBasis(std::vector<DensityMatrix> inputs);

  /// {|z+>, |z->, |x+>, |y+>}: the minimal informationally complete
  /// pure-state set for a qubit.
  static TomographyBasis standard_qubit();

  int size() const { return static_cast<int>(inputs_.size()); }
  int dim() const { return inputs_.front().dim(); }
  const std::vector<DensityMatrix>& inputs() const { return inputs_; }

private:
  std::vector<DensityMatrix> inputs_;
};

/// Hermitian measurement operator.
class Observable {
public:
  explicit Observable(ComplexMatrix m);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

private:
  ComplexMatrix matrix_;
};

/// One prepared-and-evolved input: everything tomography needs about it.
struct ExperimentRecord {
  int input_label = 0;
  DensityMatrix prepared_system;
  DensityMatrix output_system;
  double probability = 0.0;
  std::vector<double> expectations;
};

/// Reconstructed system-only map plus its physicality verdict.
struct ProcessDiagnosis {
  SuperOperator process;
  double choi_min_eigenvalue = 0.0;
  bool is_cp = false;
  double tp_deviation = 0.0;
  double linearity_residual = 0.0;
};

/// Prepare, evolve, reduce and measure each basis input. The procedure must
/// provide exactly one preparation per basis input, and its delivered system
/// state must match the declared basis input.
std::vector<ExperimentRecord> run_pipeline(
    const BipartiteState& rho_se, const PreparationProcedure& proc,
    const JointDynamics& d, const TomographyBasis& basis,
    const std::vector<Observable>& observables = {});

/// The linear map taking each prepared input to its recorded output, by
/// least-squares inversion in vectorized-operator space. Exact linear
/// inversion on noiseless data: any Choi negativity in the result is
/// attributable to the physics of the records, never to a fitting
/// constraint.
SuperOperator reconstruct_process(const std::vector<ExperimentRecord>& records);

/// max_m || Lambda(P_m) - output_m ||_F over the records.
double linearity_residual(const SuperOperator& process,
                          const std::vector<ExperimentRecord>& records);

/// Bundles the Choi spectrum verdict and the linear-fit residual for a
/// reconstructed process.
ProcessDiagnosis diagnose(const SuperOperator& process,
                          const std::vector<ExperimentRecord>& records);

} // namespace prepsim
