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

#include <functional>
#include <vector>

#include "prepsim/qmath.hpp"

namespace prepsim {

/// Quantum operation in Kraus form. Construction enforces a nonempty set of
/// equal-dimension operators with sum K^dagger K <= I (trace-nonincreasing);
/// preparations are allowed to discard probability, so trace preservation is
/// a separate, queryable property.
class KrausChannel {
public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators);

  int dim() const { return static_cast<int>(operators_.front().rows()); }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

  /// sum K^dagger K within `tolerance` of the identity (Frobenius norm).
  bool is_trace_preserving(double tolerance = tol::structural) const;

  /// Frobenius norm of (sum K^dagger K - I).
  double trace_preservation_deviation() const;

private:
  std::vector<ComplexMatrix> operators_;
};

KrausChannel identity_channel(int dim);
KrausChannel unitary_channel(const ComplexMatrix& u);
/// Single-qubit depolarizing channel with Kraus set
/// {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}.
KrausChannel depolarizing_channel(double p);
/// Trace-decreasing channel {P} for a projector P.
KrausChannel projector_channel(const ComplexMatrix& p);

/// sum_k K rho K^dagger.
ComplexMatrix apply_kraus(const KrausChannel& c, const ComplexMatrix& rho);

// ---------------------------------------------------------------------------
// Superoperators (column-stacking convention)
// ---------------------------------------------------------------------------
// vec stacks columns: vec(M)[r + c*d] = M(r, c). Under this convention the
// superoperator of rho -> A rho B^dagger is conj(B) (x) A; the map of a Kraus
// channel is sum_k conj(K_k) (x) K_k. Fixed once here and property-tested.

/// Column-stacking vectorization of a d x d matrix.
ComplexVector vec(const ComplexMatrix& m);

/// Inverse of `vec` for a d x d matrix.
ComplexMatrix unvec(const ComplexVector& v, int dim);

/// Linear map on operators, stored as a d^2 x d^2 matrix acting on
/// column-vectorized operators.
struct SuperOperator {
  int dim = 0;
  ComplexMatrix matrix;
};

/// Builds the matrix of an operator-to-operator function by evaluating it on
/// the matrix-unit basis E_ij. The caller promises linearity; violations do
/// not fail here, they surface as reconstruction residuals downstream.
SuperOperator superop_from_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& apply, int dim);

/// unvec(S * vec(rho)).
ComplexMatrix apply_superop(const SuperOperator& s, const ComplexMatrix& rho);

/// Frobenius deviation of S applied to seeded Hermitian probes from
/// Hermiticity; ~0 for any physical map.
bool preserves_hermiticity(const SuperOperator& s,
                           double tolerance = tol::structural);

/// Choi operator C = sum_ij E_ij (x) Lambda(E_ij): block (i,j) holds
/// Lambda(E_ij). Hermitian for Hermiticity-preserving maps; enforced at
/// construction.
struct ChoiMatrix {
  int dim = 0;
  ComplexMatrix matrix;
};

ChoiMatrix choi_from_superop(const SuperOperator& s);

/// Complete-positivity and trace-preservation verdict for a map, read off
/// its Choi spectrum. `min_eigenvalue` is always reported raw; the CP call
/// uses the dedicated negativity threshold, not the structural tolerance.
struct CpDiagnosis {
  double min_eigenvalue = 0.0;
  bool is_cp = false;
  double tp_deviation = 0.0;
};

CpDiagnosis cp_diagnosis(const ChoiMatrix& c);

} // namespace prepsim
