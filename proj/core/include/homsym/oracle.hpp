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

#include "homsym/fock.hpp"
#include "homsym/linops.hpp"
#include "homsym/metrology.hpp"

// Brute-force dense reference implementations. Everything here is naive on
// purpose (explicit permanents, ladder algebra, scaling-and-squaring
// exponentials, full eigendecompositions) and shares no computational code
// with the sparse fast paths it is used to check.
namespace homsym::oracle {

/// Refuse sectors whose dense matrices would stop being desk-scale.
inline constexpr long long sector_dimension_cap = 20000;

/// All occupation vectors with a fixed total photon number, enumerated in
/// lexicographic order on the count vectors. Index <-> key round trips are
/// exact.
class DenseSectorBasis {
public:
    DenseSectorBasis(ModeLayout layout, int photons);

    const ModeLayout& layout() const { return layout_; }
    int photons() const { return photons_; }
    int dimension() const { return static_cast<int>(elements_.size()); }
    const OccupationVector& element(int index) const;
    int index_of(const OccupationVector& key) const;

    static long long dimension_for(const ModeLayout& layout, int photons);

private:
    ModeLayout layout_;
    int photons_;
    std::vector<OccupationVector> elements_;
};

Eigen::VectorXcd embed_state(const DenseSectorBasis& basis, const FockState& state);
FockState extract_state(const DenseSectorBasis& basis, const Eigen::VectorXcd& vec);

/// Permanent by explicit permutation enumeration.
Complex permanent(const Eigen::MatrixXcd& m);

/// Dense sector matrix of the induced Fock-space unitary, entry by entry from
/// the permanent formula <t|U|m> = per(U[t|m]) / sqrt(prod t! prod m!).
Eigen::MatrixXcd embed_unitary(const DenseSectorBasis& basis, const ModeUnitary& u);

/// Dense sector matrix of sum_{jk} h(j,k) a_j^dag a_k via ladder algebra.
Eigen::MatrixXcd embed_generator(const DenseSectorBasis& basis, const OneBodyGenerator& g);

/// Dense cyclic-shift operator by pure basis relabeling.
Eigen::MatrixXcd dense_cyclic_shift(const DenseSectorBasis& basis);

/// Pi_j = (1/n) sum_l (omega^{-j} P)^l as a dense Hermitian idempotent.
Eigen::MatrixXcd dense_projector_residue(const DenseSectorBasis& basis, int j);

/// exp(i kappa h) by scaling and squaring of the Taylor series.
Eigen::MatrixXcd dense_expm(const Eigen::MatrixXcd& h, double kappa);

Eigen::MatrixXcd density_matrix(const DenseSectorBasis& basis, const MixedState& rho);

/// Mixed-state quantum Fisher information from the symmetric logarithmic
/// derivative eigendecomposition formula,
///     Q = 2 sum_{jk} |<j|H|k>|^2 (l_j - l_k)^2 / (l_j + l_k),
/// pairs with l_j + l_k below 1e-12 skipped.
double mixed_qfi_sld(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& h);

} // namespace homsym::oracle
