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

namespace prepsim::tol {

// All numerical thresholds live here; nothing else in the library hardcodes
// a tolerance.

/// Structural checks: Hermiticity, unit trace, positive semidefiniteness,
/// unitarity, trace preservation of channels.
inline constexpr double structural = 1e-10;

/// Trace bookkeeping (partial traces, probability sums).
inline constexpr double trace_identity = 1e-12;

/// A Choi minimum eigenvalue above -cp_negativity counts as completely
/// positive. Looser than `structural` so that genuine negativity is never
/// confused with rounding noise; reports always carry the raw eigenvalue.
inline constexpr double cp_negativity = 1e-9;

/// Operator Schmidt coefficients and tomography-basis singular values below
/// this count as zero (factorization detection, spanning-set checks).
inline constexpr double schmidt_rank = 1e-8;

/// Preparations whose success probability falls at or below this floor are
/// rejected: the renormalized post-state is numerically meaningless.
inline constexpr double probability_floor = 1e-12;

} // namespace prepsim::tol
