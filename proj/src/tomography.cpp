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

#include "prepsim/tomography.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace prepsim {

namespace {

/// Stacks vec(inputs[m]) as columns of a d^2 x n matrix.
ComplexMatrix stack_vectorized(const std::vector<DensityMatrix>& inputs) {
  const int d = inputs.front().dim();
  ComplexMatrix stacked(d * d, static_cast<Eigen::Index>(inputs.size()));
  for (std::size_t m = 0; m < inputs.size(); ++m) {
    stacked.col(static_cast<Eigen::Index>(m)) = vec(inputs[m].matrix());
  }
  return stacked;
}

double smallest_singular_value(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

} // namespace

TomographyBasis::TomographyBasis(std::vector<DensityMatrix> inputs)
    : inputs_(std::move(inputs)) {
  if (inputs_.empty()) {
    throw DegenerateBasisError("TomographyBasis: empty input set");
  }
  const int d = inputs_.front().dim();
  for (const DensityMatrix& state : inputs_) {
    if (state.dim() != d) {
      throw DimensionError("TomographyBasis: inputs have mixed dimensions");
    }
  }
  if (static_cast<int>(inputs_.size()) < d * d) {
    throw DegenerateBasisError(
        "TomographyBasis: " + std::to_string(inputs_.size()) +
        " inputs cannot span the " + std::to_string(d * d) +
        "-dimensional operator space");
  }
  const double sv = smallest_singular_value(stack_vectorized(inputs_));
  if (sv <= tol::schmidt_rank) {
    throw DegenerateBasisError(
        "TomographyBasis: inputs are rank-deficient (smallest singular value " +
        std::to_string(sv) + ")");
  }
}

TomographyBasis TomographyBasis::standard_qubit() {
  return TomographyBasis({pure_density(z_plus()), pure_density(z_minus()),
                          pure_density(x_plus()), pure_density(y_plus())});
}

Observable::Observable(ComplexMatrix m) : matrix_(std::move(m)) {
  require_valid_matrix(matrix_, "Observable");
  const double dev = hermiticity_deviation(matrix_);
  if (dev > tol::structural) {
    throw ContractViolation("Observable: Hermiticity deviation " +
                            std::to_string(dev) + " exceeds tolerance");
  }
}

std::vector<ExperimentRecord> run_pipeline(
    const BipartiteState& rho_se, const PreparationProcedure& proc,
    const JointDynamics& d, const TomographyBasis& basis,
    const std::vector<Observable>& observables) {
  if (input_count(proc) != basis.size()) {
    throw DimensionError("run_pipeline: procedure provides " +
                         std::to_string(input_count(proc)) +
                         " preparations for " + std::to_string(basis.size()) +
                         " basis inputs");
  }
  if (basis.dim() != rho_se.dim_s()) {
    throw DimensionError("run_pipeline: basis dimension " +
                         std::to_string(basis.dim()) +
                         " != system dimension " +
                         std::to_string(rho_se.dim_s()));
  }
  for (const Observable& obs : observables) {
    if (obs.dim() != rho_se.dim_s()) {
      throw DimensionError("run_pipeline: observable dimension mismatch");
    }
  }

  std::vector<PreparationOutcome> outcomes;
  try {
    outcomes = run_procedure(rho_se, proc);
  } catch (const ImpossiblePreparation&) {
    // Already carries the offending input label.
    throw;
  }

  std::vector<ExperimentRecord> records;
  records.reserve(outcomes.size());
  for (std::size_t m = 0; m < outcomes.size(); ++m) {
    const PreparationOutcome& outcome = outcomes[m];
    DensityMatrix prepared_system = reduce_system(outcome.prepared);

    // The procedure must deliver the basis input it claims to prepare;
    // silent substitution would change the experiment's meaning.
    const double mismatch =
        trace_distance(prepared_system, basis.inputs()[m]);
    if (mismatch > tol::structural) {
      throw ContractViolation(
          "run_pipeline: preparation " + std::to_string(m) +
          " delivers a system state at trace distance " +
          std::to_string(mismatch) + " from the declared basis input");
    }

    DensityMatrix output = system_output(outcome.prepared, d);

    std::vector<double> expectations;
    expectations.reserve(observables.size());
    for (const Observable& obs : observables) {
      const Complex value = (obs.matrix() * output.matrix()).trace();
      if (std::abs(value.imag()) > tol::trace_identity) {
        throw Error("run_pipeline: expectation value has imaginary part " +
                    std::to_string(value.imag()));
      }
      expectations.push_back(value.real());
    }

    records.push_back(ExperimentRecord{outcome.input_label,
                                       std::move(prepared_system),
                                       std::move(output), outcome.probability,
                                       std::move(expectations)});
  }
  return records;
}

SuperOperator reconstruct_process(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) {
    throw DegenerateBasisError("reconstruct_process: no records");
  }
  const int d = records.front().prepared_system.dim();
  const int n = static_cast<int>(records.size());
  if (n < d * d) {
    throw DegenerateBasisError("reconstruct_process: " + std::to_string(n) +
                               " records cannot determine a map on a " +
                               std::to_string(d) + "-dimensional system");
  }

  ComplexMatrix in(d * d, n);
  ComplexMatrix out(d * d, n);
  for (int m = 0; m < n; ++m) {
    in.col(m) = vec(records[m].prepared_system.matrix());
    out.col(m) = vec(records[m].output_system.matrix());
  }

  if (smallest_singular_value(in) <= tol::schmidt_rank) {
    throw DegenerateBasisError(
        "reconstruct_process: prepared inputs do not span the operator space");
  }

  // Least-squares solve of Lambda * In = Out, column-block by transposition:
  // In^T * Lambda^T = Out^T.
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(in.transpose());
  ComplexMatrix lambda_t = qr.solve(out.transpose());
  return SuperOperator{d, lambda_t.transpose()};
}

double linearity_residual(const SuperOperator& process,
                          const std::vector<ExperimentRecord>& records) {
  double worst = 0.0;
  for (const ExperimentRecord& record : records) {
    const ComplexMatrix predicted =
        apply_superop(process, record.prepared_system.matrix());
    worst = std::max(worst,
                     (predicted - record.output_system.matrix()).norm());
  }
  return worst;
}

ProcessDiagnosis diagnose(const SuperOperator& process,
                          const std::vector<ExperimentRecord>& records) {
  ChoiMatrix choi = choi_from_superop(process);
  CpDiagnosis cp = cp_diagnosis(choi);
  ProcessDiagnosis out;
  out.process = process;
  out.choi_min_eigenvalue = cp.min_eigenvalue;
  out.is_cp = cp.is_cp;
  out.tp_deviation = cp.tp_deviation;
  out.linearity_residual = linearity_residual(process, records);
  return out;
}

} // namespace prepsim
