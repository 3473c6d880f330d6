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

#include <complex>

#include <Eigen/Dense>

#include "prepsim/errors.hpp"
#include "prepsim/tolerances.hpp"

namespace prepsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Which tensor factor a partial trace keeps. The system is always the LEFT
/// factor: a joint index flattens as `system_index * dim_e + env_index`.
enum class Keep { System, Environment };

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvector columns orthonormal and aligned with the eigenvalue order.
struct HermitianEigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

/// True when every entry of `m` has finite real and imaginary parts.
bool is_finite_matrix(const ComplexMatrix& m);

/// Largest entry-wise deviation |m - m^dagger|.
double hermiticity_deviation(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::structural);

/// Frobenius norm of (U^dagger U - I).
double unitarity_deviation(const ComplexMatrix& u);

bool is_unitary(const ComplexMatrix& u, double tolerance = tol::structural);

/// Throws DimensionError unless `m` is square with positive dimension, and
/// ContractViolation when any entry is non-finite.
void require_valid_matrix(const ComplexMatrix& m, const char* what);

// ---------------------------------------------------------------------------
// Kernel operations
// ---------------------------------------------------------------------------

/// Kronecker product. Entry ((i*db + k), (j*db + l)) = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out one factor of a (dim_s * dim_e)-dimensional operator.
/// keep == System:      out(i,j) = sum_k m(i*de + k, j*de + k)
/// keep == Environment: out(k,l) = sum_i m(i*de + k, i*de + l)
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_s, int dim_e,
                            Keep keep);

/// Eigendecomposition of a Hermitian matrix. Throws ContractViolation when
/// the input fails the Hermiticity check.
HermitianEigenSystem hermitian_eigen(const ComplexMatrix& m,
                                     double tolerance = tol::structural);

/// exp(-i * h * t) for Hermitian h, computed through the eigendecomposition.
ComplexMatrix matrix_exponential_unitary(const ComplexMatrix& h, double t);

/// |h| = V diag(|lambda|) V^dagger for Hermitian h.
ComplexMatrix matrix_abs(const ComplexMatrix& h);

ComplexMatrix identity(int dim);

// ---------------------------------------------------------------------------
// Fixed gates (qubit unless noted)
// ---------------------------------------------------------------------------

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
ComplexMatrix phase_s();
ComplexMatrix phase_t();
/// Two-qubit gates on the (system, environment) ordering; the first factor
/// controls CNOT.
ComplexMatrix cnot();
ComplexMatrix swap_gate();
ComplexMatrix iswap();

} // namespace prepsim
