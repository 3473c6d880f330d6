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

#include "prepsim/qmath.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace prepsim {

bool is_finite_matrix(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        return false;
      }
    }
  }
  return true;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && hermiticity_deviation(m) <= tolerance;
}

double unitarity_deviation(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).norm();
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  return u.rows() == u.cols() && unitarity_deviation(u) <= tolerance;
}

void require_valid_matrix(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a nonempty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!is_finite_matrix(m)) {
    throw ContractViolation(std::string(what) + ": matrix has non-finite entries");
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_valid_matrix(a, "tensor (left factor)");
  require_valid_matrix(b, "tensor (right factor)");
  return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_s, int dim_e,
                            Keep keep) {
  require_valid_matrix(m, "partial_trace");
  if (dim_s <= 0 || dim_e <= 0 ||
      m.rows() != static_cast<Eigen::Index>(dim_s) * dim_e) {
    throw DimensionError("partial_trace: matrix dimension " +
                         std::to_string(m.rows()) + " != dim_s*dim_e = " +
                         std::to_string(dim_s) + "*" + std::to_string(dim_e));
  }
  if (keep == Keep::System) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_s, dim_s);
    for (int i = 0; i < dim_s; ++i) {
      for (int j = 0; j < dim_s; ++j) {
        Complex sum = 0.0;
        for (int k = 0; k < dim_e; ++k) {
          sum += m(i * dim_e + k, j * dim_e + k);
        }
        out(i, j) = sum;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_e, dim_e);
  for (int k = 0; k < dim_e; ++k) {
    for (int l = 0; l < dim_e; ++l) {
      Complex sum = 0.0;
      for (int i = 0; i < dim_s; ++i) {
        sum += m(i * dim_e + k, i * dim_e + l);
      }
      out(k, l) = sum;
    }
  }
  return out;
}

HermitianEigenSystem hermitian_eigen(const ComplexMatrix& m, double tolerance) {
  require_valid_matrix(m, "hermitian_eigen");
  const double dev = hermiticity_deviation(m);
  if (dev > tolerance) {
    throw ContractViolation("hermitian_eigen: input deviates from Hermitian by " +
                            std::to_string(dev));
  }
  // Symmetrize before handing off so stray rounding in the upper triangle
  // cannot leak into the solve.
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigen: eigensolver failed to converge");
  }
  return HermitianEigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_exponential_unitary(const ComplexMatrix& h, double t) {
  HermitianEigenSystem es = hermitian_eigen(h);
  const Eigen::Index d = h.rows();
  ComplexVector phases(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    phases(k) = std::exp(Complex(0.0, -es.eigenvalues(k) * t));
  }
  return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

ComplexMatrix matrix_abs(const ComplexMatrix& h) {
  HermitianEigenSystem es = hermitian_eigen(h);
  ComplexVector magnitudes = es.eigenvalues.cwiseAbs().cast<Complex>();
  return es.eigenvectors * magnitudes.asDiagonal() * es.eigenvectors.adjoint();
}

ComplexMatrix identity(int dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1,
       1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1),
       Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0,
       0, -1;
  return m;
}

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m << s, s,
       s, -s;
  return m;
}

ComplexMatrix phase_s() {
  ComplexMatrix m(2, 2);
  m << 1, 0,
       0, Complex(0, 1);
  return m;
}

ComplexMatrix phase_t() {
  ComplexMatrix m(2, 2);
  m << 1, 0,
       0, std::exp(Complex(0, M_PI / 4));
  return m;
}

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

ComplexMatrix swap_gate() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

ComplexMatrix iswap() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 2) = Complex(0, 1);
  m(2, 1) = Complex(0, 1);
  m(3, 3) = 1;
  return m;
}

} // namespace prepsim
