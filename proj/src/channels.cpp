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

#include "prepsim/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace prepsim {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw ContractViolation("KrausChannel: empty operator list");
  }
  const Eigen::Index d = operators_.front().rows();
  for (const ComplexMatrix& k : operators_) {
    require_valid_matrix(k, "KrausChannel operator");
    if (k.rows() != d) {
      throw DimensionError("KrausChannel: operators have mixed dimensions");
    }
  }
  // Trace-nonincreasing: I - sum K^dagger K must be PSD within tolerance.
  ComplexMatrix ktk = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : operators_) {
    ktk += k.adjoint() * k;
  }
  HermitianEigenSystem es = hermitian_eigen(identity(static_cast<int>(d)) - ktk);
  if (es.eigenvalues.minCoeff() < -tol::structural) {
    throw ContractViolation(
        "KrausChannel: sum K^dagger K exceeds the identity by " +
        std::to_string(-es.eigenvalues.minCoeff()));
  }
}

double KrausChannel::trace_preservation_deviation() const {
  const int d = dim();
  ComplexMatrix ktk = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : operators_) {
    ktk += k.adjoint() * k;
  }
  return (ktk - identity(d)).norm();
}

bool KrausChannel::is_trace_preserving(double tolerance) const {
  return trace_preservation_deviation() <= tolerance;
}

KrausChannel identity_channel(int dim) {
  return KrausChannel({identity(dim)});
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  if (!is_unitary(u)) {
    throw ContractViolation("unitary_channel: matrix deviates from unitary by " +
                            std::to_string(unitarity_deviation(u)));
  }
  return KrausChannel({u});
}

KrausChannel depolarizing_channel(double p) {
  if (p < 0.0 || p > 1.0) {
    throw DomainError("depolarizing_channel: p = " + std::to_string(p) +
                      " outside [0, 1]");
  }
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * identity(2));
  ops.push_back(std::sqrt(p / 4.0) * pauli_x());
  ops.push_back(std::sqrt(p / 4.0) * pauli_y());
  ops.push_back(std::sqrt(p / 4.0) * pauli_z());
  return KrausChannel(std::move(ops));
}

KrausChannel projector_channel(const ComplexMatrix& p) {
  if (!is_hermitian(p) || (p * p - p).cwiseAbs().maxCoeff() > tol::structural) {
    throw ContractViolation("projector_channel: matrix is not a projector");
  }
  return KrausChannel({p});
}

ComplexMatrix apply_kraus(const KrausChannel& c, const ComplexMatrix& rho) {
  require_valid_matrix(rho, "apply_kraus");
  if (rho.rows() != c.dim()) {
    throw DimensionError("apply_kraus: state dimension " +
                         std::to_string(rho.rows()) +
                         " != channel dimension " + std::to_string(c.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const ComplexMatrix& k : c.operators()) {
    out += k * rho * k.adjoint();
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& m) {
  const Eigen::Index d = m.rows();
  ComplexVector v(d * d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      v(r + c * d) = m(r, c);
    }
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimensionError("unvec: vector length " + std::to_string(v.size()) +
                         " != dim^2 = " + std::to_string(dim * dim));
  }
  ComplexMatrix m(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      m(r, c) = v(r + c * dim);
    }
  }
  return m;
}

SuperOperator superop_from_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& apply, int dim) {
  if (dim <= 0) {
    throw DimensionError("superop_from_action: dimension must be positive");
  }
  ComplexMatrix s(dim * dim, dim * dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      ComplexMatrix e_ij = ComplexMatrix::Zero(dim, dim);
      e_ij(i, j) = 1.0;
      ComplexMatrix image = apply(e_ij);
      if (image.rows() != dim || image.cols() != dim) {
        throw DimensionError("superop_from_action: action changed dimension");
      }
      // vec(E_ij) is the basis vector at index i + j*dim.
      s.col(i + j * dim) = vec(image);
    }
  }
  return SuperOperator{dim, std::move(s)};
}

ComplexMatrix apply_superop(const SuperOperator& s, const ComplexMatrix& rho) {
  require_valid_matrix(rho, "apply_superop");
  if (rho.rows() != s.dim) {
    throw DimensionError("apply_superop: state dimension " +
                         std::to_string(rho.rows()) +
                         " != superoperator dimension " + std::to_string(s.dim));
  }
  return unvec(s.matrix * vec(rho), s.dim);
}

bool preserves_hermiticity(const SuperOperator& s, double tolerance) {
  // Probe with the Hermitian basis: E_ii, (E_ij + E_ji), i(E_ij - E_ji).
  const int d = s.dim;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      ComplexMatrix probe = ComplexMatrix::Zero(d, d);
      if (i == j) {
        probe(i, i) = 1.0;
      } else {
        probe(i, j) = 1.0;
        probe(j, i) = 1.0;
      }
      if (hermiticity_deviation(apply_superop(s, probe)) > tolerance) {
        return false;
      }
      if (i != j) {
        probe(i, j) = Complex(0.0, 1.0);
        probe(j, i) = Complex(0.0, -1.0);
        if (hermiticity_deviation(apply_superop(s, probe)) > tolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

ChoiMatrix choi_from_superop(const SuperOperator& s) {
  const int d = s.dim;
  ComplexMatrix c = ComplexMatrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      ComplexMatrix image = unvec(s.matrix.col(i + j * d), d);
      // C = sum_ij E_ij (x) Lambda(E_ij): block row i, block column j.
      c.block(i * d, j * d, d, d) = image;
    }
  }
  const double dev = hermiticity_deviation(c);
  if (dev > tol::structural) {
    throw ContractViolation("choi_from_superop: Choi matrix deviates from "
                            "Hermitian by " + std::to_string(dev) +
                            "; the map does not preserve Hermiticity");
  }
  return ChoiMatrix{d, std::move(c)};
}

CpDiagnosis cp_diagnosis(const ChoiMatrix& c) {
  HermitianEigenSystem es = hermitian_eigen(c.matrix);
  CpDiagnosis out;
  out.min_eigenvalue = es.eigenvalues.minCoeff();
  out.is_cp = out.min_eigenvalue >= -tol::cp_negativity;
  // Tracing out the output factor of C leaves sum_ij E_ij Tr[Lambda(E_ij)],
  // which equals I exactly for trace-preserving maps.
  ComplexMatrix input_side =
      partial_trace(c.matrix, c.dim, c.dim, Keep::System);
  out.tp_deviation = (input_side - identity(c.dim)).norm();
  return out;
}

} // namespace prepsim
