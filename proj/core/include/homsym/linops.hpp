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

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "homsym/fock.hpp"
#include "homsym/layout.hpp"

namespace homsym {

/// Unitary matrix M on the flattened (spatial x internal) mode space. The
/// induced Fock-space operator acts on creation operators as
///
///     a_j^dag  ->  sum_k M(k, j) a_k^dag,        vacuum -> vacuum,
///
/// i.e. column j of M is the image of mode j. Unitarity is checked at
/// construction; building a non-unitary matrix is an error, not a warning.
///
/// Spatial-only unitaries have block form M_spatial (x) I_d and commute with
/// every internal-mode-diagonal unitary I_n (x) V.
///
/// Monomial unitaries (one nonzero entry per column: permutations, diagonal
/// phases, phased swaps) additionally carry an exact relabeling table so that
/// applying them never routes through floating-point mode mixing.
class ModeUnitary {
public:
    struct Monomial {
        std::vector<int> row;        // column j maps to row[j]
        std::vector<Complex> phase;  // with this phase
    };

    static ModeUnitary from_spatial(const ModeLayout& layout, const Eigen::MatrixXcd& spatial);
    static ModeUnitary from_full(const ModeLayout& layout, const Eigen::MatrixXcd& full,
                                 bool spatial_only = false);

    const ModeLayout& layout() const { return layout_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    bool spatial_only() const { return spatial_only_; }
    const std::optional<Monomial>& monomial() const { return monomial_; }

    ModeUnitary adjoint() const;

private:
    ModeUnitary(ModeLayout layout, Eigen::MatrixXcd matrix, bool spatial_only,
                std::optional<Monomial> monomial);

    friend ModeUnitary compose(const ModeUnitary&, const ModeUnitary&);
    friend ModeUnitary permutation_unitary(const ModeLayout&, const std::vector<int>&);
    friend ModeUnitary diagonal_phase_unitary(const ModeLayout&);
    friend ModeUnitary identity_unitary(const ModeLayout&);
    friend ModeUnitary effective_symmetry(const ModeLayout&, double, double);

    ModeLayout layout_;
    Eigen::MatrixXcd matrix_;
    bool spatial_only_ = false;
    std::optional<Monomial> monomial_;
};

/// General balanced beam splitter on two spatial ports,
///
///     (e^{i tau}/sqrt2) [ e^{i theta}   e^{-i phi}  ]
///                       [ e^{i phi}    -e^{-i theta} ].
///
/// (0, 0, 0) is the Hadamard-form splitter; every entry has modulus 1/sqrt2.
ModeUnitary bs_unitary(const ModeLayout& layout, double theta, double phi, double tau);

/// n-point discrete Fourier transform, U(k, l) = omega^{kl}/sqrt(n). It
/// diagonalizes the cyclic shift: P = U D U^dag.
ModeUnitary dft_unitary(const ModeLayout& layout);

/// Spatial permutation: port j relabeled to sigma(j).
ModeUnitary permutation_unitary(const ModeLayout& layout, const std::vector<int>& sigma);

/// The cyclic shift j -> j-1 (mod n); the generator of the symmetry probed by
/// the DFT interferometer.
ModeUnitary cyclic_permutation_unitary(const ModeLayout& layout);

/// diag(omega^0, ..., omega^{n-1}) on the spatial ports.
ModeUnitary diagonal_phase_unitary(const ModeLayout& layout);

ModeUnitary identity_unitary(const ModeLayout& layout);

/// Direct sum of DFT blocks adapted to the disjoint cycles of sigma; it
/// diagonalizes permutation_unitary(sigma).
ModeUnitary block_dft_unitary(const ModeLayout& layout, const std::vector<int>& sigma);

/// Matrix product a * b; the operator composition homomorphism.
ModeUnitary compose(const ModeUnitary& a, const ModeUnitary& b);

/// Image of a state under the induced Fock-space unitary. Permutation and
/// diagonal-phase unitaries reduce to exact relabeling / phase multiplication
/// of basis keys; anything else expands creation-operator monomials.
FockState apply_to_state(const ModeUnitary& u, const FockState& state);
MixedState apply_to_state(const ModeUnitary& u, const MixedState& state);

} // namespace homsym
