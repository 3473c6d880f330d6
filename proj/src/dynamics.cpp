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

#include "prepsim/dynamics.hpp"

#include <string>
#include <utility>

namespace prepsim {

JointDynamics JointDynamics::from_unitary(ComplexMatrix u) {
  require_valid_matrix(u, "JointDynamics");
  const double dev = unitarity_deviation(u);
  if (dev > tol::structural) {
    throw ContractViolation("JointDynamics: matrix deviates from unitary by " +
                            std::to_string(dev));
  }
  return JointDynamics(std::move(u));
}

JointDynamics JointDynamics::from_hamiltonian(const ComplexMatrix& h,
                                              double duration) {
  return JointDynamics(matrix_exponential_unitary(h, duration));
}

BipartiteState evolve(const BipartiteState& state, const JointDynamics& d) {
  if (d.dim() != state.joint().dim()) {
    throw DimensionError("evolve: dynamics dimension " + std::to_string(d.dim()) +
                         " != joint state dimension " +
                         std::to_string(state.joint().dim()));
  }
  const ComplexMatrix& u = d.unitary();
  ComplexMatrix out = u * state.joint().matrix() * u.adjoint();
  return BipartiteState(state.dim_s(), state.dim_e(),
                        DensityMatrix(std::move(out)));
}

DensityMatrix system_output(const BipartiteState& state,
                            const JointDynamics& d) {
  return reduce_system(evolve(state, d));
}

RealVector operator_schmidt_coefficients(const JointDynamics& d, int dim_s,
                                         int dim_e) {
  if (d.dim() != dim_s * dim_e) {
    throw DimensionError("operator_schmidt_coefficients: dynamics dimension " +
                         std::to_string(d.dim()) + " != dim_s*dim_e");
  }
  // Realign U[(i_s, i_e), (j_s, j_e)] into R[(i_s, j_s), (i_e, j_e)]; the
  // singular values of R are the operator Schmidt coefficients of U.
  const ComplexMatrix& u = d.unitary();
  ComplexMatrix realigned(dim_s * dim_s, dim_e * dim_e);
  for (int is = 0; is < dim_s; ++is) {
    for (int js = 0; js < dim_s; ++js) {
      for (int ie = 0; ie < dim_e; ++ie) {
        for (int je = 0; je < dim_e; ++je) {
          realigned(is * dim_s + js, ie * dim_e + je) =
              u(is * dim_e + ie, js * dim_e + je);
        }
      }
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(realigned);
  return svd.singularValues();
}

bool is_factorized(const JointDynamics& d, int dim_s, int dim_e) {
  RealVector sv = operator_schmidt_coefficients(d, dim_s, dim_e);
  int significant = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol::schmidt_rank) {
      ++significant;
    }
  }
  return significant == 1;
}

} // namespace prepsim
