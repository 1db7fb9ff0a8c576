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

#include <utility>
#include <vector>

#include "homsym/fock.hpp"
#include "homsym/linops.hpp"

namespace homsym {

/// Symmetry diagnostics of a state: the exchange (n = 2) or cyclic-shift
/// expectation value, the symmetric/antisymmetric weights, and the squared
/// norms of the components in each eigenspace of the shift.
struct SymmetryReport {
    Complex expectation;                  // <S> for n = 2, <P> otherwise
    double symmetric_weight = 0.0;        // weight of the +1 eigenspace
    double antisymmetric_weight = 0.0;    // weight of the -1 eigenspace (n even)
    std::vector<double> residue_weights;  // weight of the omega^j eigenspace, j = 0..n-1
};

/// sigma(j) = (j - 1) mod n as a permutation table.
std::vector<int> cyclic_shift_permutation(int n);

/// The swap (0 1); the exchange symmetry of the two-port interferometer.
std::vector<int> exchange_permutation();

/// Relabel spatial ports of every basis key: counts in port j move to port
/// sigma(j). Exact integer relabeling, no floating-point mixing.
FockState apply_spatial_permutation(const FockState& state, const std::vector<int>& sigma);

/// <psi| P_sigma |psi> by exact key relabeling. Requires a normalized state.
Complex permutation_expectation(const FockState& state, const std::vector<int>& sigma);

/// <psi| S |psi> for the two-port exchange. Real within 1e-10 imaginary
/// residue (S is Hermitian); a larger residue throws.
Complex exchange_expectation(const FockState& state);

/// <psi| P^l |psi> for l = 0..n-1.
std::vector<Complex> cyclic_expectations(const FockState& state);

/// Squared norms of the omega^j eigencomponents of P,
/// w_j = <Pi_j> = (1/n) sum_l omega^{-jl} <P^l>; they sum to 1.
std::vector<double> residue_weights(const FockState& state);

/// Pi_j |psi>: projection onto the omega^j eigenspace of the cyclic shift.
FockState project_residue(const FockState& state, int j);

/// Split into exchange-symmetric and antisymmetric parts,
/// psi = (psi + S psi)/2 + (psi - S psi)/2. Parts are not normalized; their
/// squared norms are (1 +- <S>)/2.
std::pair<FockState, FockState> decompose_exchange(const FockState& state);

/// The symmetry effectively measured by parity detection behind the general
/// balanced splitter bs_unitary(theta, phi, tau):
///
///     [ 0                  e^{-i(theta+phi)} ]
///     [ e^{i(theta+phi)}   0                 ]
///
/// Hermitian, unitary, squares to the identity; tau drops out.
ModeUnitary effective_symmetry(const ModeLayout& layout, double theta, double phi);

/// tr(rho P_sigma) = sum_j p_j <psi_j| P_sigma |psi_j>, the average symmetry
/// of the pure components.
Complex mixed_symmetry_measure(const MixedState& rho, const std::vector<int>& sigma);

/// Disjoint cycles covering [0, n), each starting at its smallest element
/// and following sigma; cycles ordered by their smallest element.
std::vector<std::vector<int>> cycle_decomposition(const std::vector<int>& sigma);

SymmetryReport symmetry_report(const FockState& state);

} // namespace homsym
