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

#include <random>

#include "prepsim/channels.hpp"
#include "prepsim/states.hpp"

namespace prepsim {

using Rng = std::mt19937_64;

/// Matrix of iid standard complex Gaussians.
ComplexMatrix random_ginibre(int dim, Rng& rng);

ComplexMatrix random_hermitian(int dim, Rng& rng);

/// Haar-ish unitary: QR of a Ginibre matrix with the phase ambiguity fixed.
ComplexMatrix random_unitary(int dim, Rng& rng);

PureStateVector random_pure_state(int dim, Rng& rng);

/// Full-rank random density matrix G G^dagger / Tr.
DensityMatrix random_density_matrix(int dim, Rng& rng);

/// Generic joint state, resampled until visibly correlated
/// (correlation_norm > 1e-3).
BipartiteState random_correlated_state(int dim_s, int dim_e, Rng& rng);

BipartiteState random_product_state(int dim_s, int dim_e, Rng& rng);

/// Trace-preserving channel with `n_ops` Kraus operators, normalized via
/// S^{-1/2} of the accumulated G^dagger G.
KrausChannel random_kraus_channel(int dim, int n_ops, Rng& rng);

} // namespace prepsim
