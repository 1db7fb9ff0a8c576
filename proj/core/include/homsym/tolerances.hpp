/**
 * Copyright 2026 The homsym authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

namespace homsym::tol {

/// Stored amplitudes below this modulus are dropped; cancellations in
/// interferometer application otherwise accumulate dead keys.
inline constexpr double amplitude_prune = 1e-14;

/// "Is normalized" / norm-preservation checks on freshly computed states.
inline constexpr double norm_check = 1e-10;

/// Unitarity of mode matrices, validated at construction (max-norm).
inline constexpr double unitarity = 1e-10;

/// Hermiticity of one-body generator matrices (max-norm).
inline constexpr double hermiticity = 1e-12;

/// Detection-side vs symmetry-side agreement, and other in-op identities.
inline constexpr double identity_check = 1e-10;

/// Root-of-unity cancellation sums (projector weights landing on 0 or 1).
inline constexpr double root_sum = 1e-12;

/// Preconditions evaluated on states that may be outputs of chained
/// floating-point transformations: eigenstate membership, normalization of
/// probe states, mixed-state trace conditions.
inline constexpr double state_precondition = 1e-8;

/// Agreement between the algebraically equivalent Fisher-information
/// variance expressions.
inline constexpr double variance_match = 1e-9;

/// Relative agreement between finite-difference Fisher information and its
/// closed-form kappa -> 0 limit.
inline constexpr double fi_relative = 1e-3;

/// Eigenvalue-pair cutoff in the SLD quantum Fisher information formula.
inline constexpr double sld_cutoff = 1e-12;

} // namespace homsym::tol
