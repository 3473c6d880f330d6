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

#include "prepsim/states.hpp"

namespace prepsim {

/// Closed evolution of system plus environment: an exact joint unitary,
/// given directly or as exp(-i H t) of a Hermitian generator. Markovian
/// limits appear here as factorized unitaries, never as master equations.
class JointDynamics {
public:
  static JointDynamics from_unitary(ComplexMatrix u);
  static JointDynamics from_hamiltonian(const ComplexMatrix& h, double duration);

  int dim() const { return static_cast<int>(unitary_.rows()); }
  const ComplexMatrix& unitary() const { return unitary_; }

private:
  explicit JointDynamics(ComplexMatrix u) : unitary_(std::move(u)) {}

  ComplexMatrix unitary_;
};

/// U rho U^dagger on the joint state.
BipartiteState evolve(const BipartiteState& state, const JointDynamics& d);

/// Tr_E[U rho U^dagger]: the observable half of the pipeline.
DensityMatrix system_output(const BipartiteState& state,
                            const JointDynamics& d);

/// Operator Schmidt coefficients of the joint unitary across the
/// system/environment cut, descending.
RealVector operator_schmidt_coefficients(const JointDynamics& d, int dim_s,
                                         int dim_e);

/// True when U = U_s (x) U_e: exactly one operator Schmidt coefficient above
/// the rank threshold. Such dynamics never feed environment memory back.
bool is_factorized(const JointDynamics& d, int dim_s, int dim_e);

} // namespace prepsim
