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

#include "prepsim/states.hpp"

#include <cmath>
#include <string>

namespace prepsim {

PureStateVector::PureStateVector(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw DimensionError("PureStateVector: empty amplitude vector");
  }
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    if (!std::isfinite(amplitudes_(i).real()) || !std::isfinite(amplitudes_(i).imag())) {
      throw ContractViolation("PureStateVector: non-finite amplitude");
    }
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::structural) {
    throw ContractViolation("PureStateVector: norm " + std::to_string(norm) +
                            " deviates from 1 beyond tolerance");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  require_valid_matrix(matrix_, "DensityMatrix");
  const double herm = hermiticity_deviation(matrix_);
  if (herm > tol::structural) {
    throw ContractViolation("DensityMatrix: Hermiticity deviation " +
                            std::to_string(herm) + " exceeds tolerance");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::structural) {
    throw ContractViolation("DensityMatrix: trace (" + std::to_string(tr.real()) +
                            ", " + std::to_string(tr.imag()) + ") deviates from 1");
  }
  HermitianEigenSystem es = hermitian_eigen(matrix_);
  if (es.eigenvalues.minCoeff() < -tol::structural) {
    throw ContractViolation("DensityMatrix: minimum eigenvalue " +
                            std::to_string(es.eigenvalues.minCoeff()) +
                            " is negative beyond tolerance");
  }
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

BipartiteState::BipartiteState(int dim_s, int dim_e, DensityMatrix joint)
    : dim_s_(dim_s), dim_e_(dim_e), joint_(std::move(joint)) {
  if (dim_s_ <= 0 || dim_e_ <= 0) {
    throw DimensionError("BipartiteState: subsystem dimensions must be positive");
  }
  if (joint_.dim() != dim_s_ * dim_e_) {
    throw DimensionError("BipartiteState: joint dimension " +
                         std::to_string(joint_.dim()) + " != dim_s*dim_e = " +
                         std::to_string(dim_s_ * dim_e_));
  }
}

DensityMatrix pure_density(const PureStateVector& v) {
  const ComplexVector& a = v.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

BipartiteState product_state(const DensityMatrix& s, const DensityMatrix& e) {
  return BipartiteState(s.dim(), e.dim(),
                        DensityMatrix(tensor(s.matrix(), e.matrix())));
}

BipartiteState bell_phi_plus() {
  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = 1.0 / std::sqrt(2.0);
  phi(3) = 1.0 / std::sqrt(2.0);
  return BipartiteState(2, 2, pure_density(PureStateVector(phi)));
}

BipartiteState werner_family(double p) {
  if (p < 0.0 || p > 1.0) {
    throw DomainError("werner_family: p = " + std::to_string(p) +
                      " outside [0, 1]");
  }
  ComplexMatrix bell = bell_phi_plus().joint().matrix();
  ComplexMatrix m = p * bell + (1.0 - p) * 0.25 * identity(4);
  return BipartiteState(2, 2, DensityMatrix(std::move(m)));
}

namespace {

PureStateVector qubit_state(Complex a0, Complex a1) {
  ComplexVector v(2);
  v << a0, a1;
  return PureStateVector(std::move(v));
}

} // namespace

PureStateVector z_plus() { return qubit_state(1.0, 0.0); }
PureStateVector z_minus() { return qubit_state(0.0, 1.0); }

PureStateVector x_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return qubit_state(s, s);
}

PureStateVector x_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return qubit_state(s, -s);
}

PureStateVector y_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return qubit_state(s, Complex(0.0, s));
}

PureStateVector y_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return qubit_state(s, Complex(0.0, -s));
}

DensityMatrix mixed_qubit() {
  return DensityMatrix(0.5 * identity(2));
}

DensityMatrix reduce_system(const BipartiteState& s) {
  return DensityMatrix(partial_trace(s.joint().matrix(), s.dim_s(), s.dim_e(),
                                     Keep::System));
}

DensityMatrix reduce_environment(const BipartiteState& s) {
  return DensityMatrix(partial_trace(s.joint().matrix(), s.dim_s(), s.dim_e(),
                                     Keep::Environment));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("trace_distance: dimensions " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()) + " differ");
  }
  HermitianEigenSystem es = hermitian_eigen(a.matrix() - b.matrix());
  return 0.5 * es.eigenvalues.cwiseAbs().sum();
}

double correlation_norm(const BipartiteState& s) {
  ComplexMatrix prod = tensor(reduce_system(s).matrix(),
                              reduce_environment(s).matrix());
  return (s.joint().matrix() - prod).norm();
}

} // namespace prepsim
