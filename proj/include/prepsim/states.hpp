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

#include "prepsim/qmath.hpp"

namespace prepsim {

/// Unit-norm complex vector. Construction enforces normalization; states
/// failing the check are rejected, never silently renormalized.
class PureStateVector {
public:
  explicit PureStateVector(ComplexVector amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

private:
  ComplexVector amplitudes_;
};

/// Density operator: Hermitian, unit trace, positive semidefinite, all
/// enforced at construction. States outside tolerance are rejected, not
/// clipped -- silent repair would mask the non-CP signatures this library
/// exists to measure.
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix m);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double purity() const;

private:
  ComplexMatrix matrix_;
};

/// Joint state of system (left tensor factor) and environment (right).
class BipartiteState {
public:
  BipartiteState(int dim_s, int dim_e, DensityMatrix joint);

  int dim_s() const { return dim_s_; }
  int dim_e() const { return dim_e_; }
  const DensityMatrix& joint() const { return joint_; }

private:
  int dim_s_;
  int dim_e_;
  DensityMatrix joint_;
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// Rank-1 projector |v><v|.
DensityMatrix pure_density(const PureStateVector& v);

/// Uncorrelated joint state s (x) e.
BipartiteState product_state(const DensityMatrix& s, const DensityMatrix& e);

/// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2).
BipartiteState bell_phi_plus();

/// p |Phi+><Phi+| + (1-p) I/4: correlation tunable from none to maximal.
BipartiteState werner_family(double p);

// Bloch-axis qubit states.
PureStateVector z_plus();
PureStateVector z_minus();
PureStateVector x_plus();
PureStateVector x_minus();
PureStateVector y_plus();
PureStateVector y_minus();

/// Maximally mixed qubit I/2.
DensityMatrix mixed_qubit();

// ---------------------------------------------------------------------------
// Reductions and diagnostics
// ---------------------------------------------------------------------------

DensityMatrix reduce_system(const BipartiteState& s);
DensityMatrix reduce_environment(const BipartiteState& s);

/// (1/2) sum_i |lambda_i(a - b)|, in [0, 1] for states.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Frobenius norm of (joint - reduce_system (x) reduce_environment);
/// zero exactly when the state is a product.
double correlation_norm(const BipartiteState& s);

} // namespace prepsim
