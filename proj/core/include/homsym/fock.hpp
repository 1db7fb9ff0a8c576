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

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "homsym/layout.hpp"
#include "homsym/numeric.hpp"
#include "homsym/tolerances.hpp"

namespace homsym {

/// Photon counts per flattened (spatial, internal) mode; the label of one
/// Fock basis element. Value semantics, ordered lexicographically on the
/// count vector.
class OccupationVector {
public:
    OccupationVector() = default;
    explicit OccupationVector(std::vector<int> counts);

    int size() const { return static_cast<int>(counts_.size()); }
    int total() const { return total_; }
    int operator[](int flat) const { return counts_[static_cast<std::size_t>(flat)]; }
    const std::vector<int>& counts() const { return counts_; }

    /// Per-port totals, internal modes summed out.
    std::vector<int> spatial_totals(const ModeLayout& layout) const;

    auto operator<=>(const OccupationVector& other) const { return counts_ <=> other.counts_; }
    bool operator==(const OccupationVector& other) const { return counts_ == other.counts_; }

private:
    std::vector<int> counts_;
    int total_ = 0;
};

/// Sparse pure state: complex coefficients over orthonormal Fock basis
/// elements. All 1/sqrt(m!) factors live in the basis elements themselves,
/// so inner products are plain conjugated dot products over matching keys.
///
/// Immutable after construction; every operation returns a new value.
class FockState {
public:
    using AmplitudeMap = std::map<OccupationVector, Complex>;

    explicit FockState(ModeLayout layout);
    FockState(ModeLayout layout, AmplitudeMap amplitudes);

    const ModeLayout& layout() const { return layout_; }
    const AmplitudeMap& amplitudes() const { return amplitudes_; }

    Complex amplitude(const OccupationVector& key) const;
    std::size_t term_count() const { return amplitudes_.size(); }

    double norm_sq() const { return norm_sq_; }
    double norm() const;

    /// True when every stored amplitude was pruned away, e.g. after exact
    /// cancellation in a superposition.
    bool is_zero() const { return amplitudes_.empty(); }
    bool is_normalized(double tolerance = tol::norm_check) const;

    FockState normalized() const;
    FockState scaled(Complex factor) const;

private:
    ModeLayout layout_;
    AmplitudeMap amplitudes_;
    double norm_sq_ = 0.0;
};

/// Density operator by pure-state decomposition: weighted FockState
/// components. Weights are probabilities; components stay normalized.
class MixedState {
public:
    struct Component {
        double weight;
        FockState state;
    };

    explicit MixedState(const FockState& pure);
    MixedState(ModeLayout layout, std::vector<Component> components);

    const ModeLayout& layout() const { return layout_; }
    const std::vector<Component>& components() const { return components_; }
    bool is_pure() const { return components_.size() == 1; }

private:
    ModeLayout layout_;
    std::vector<Component> components_;
};

/// Unit-norm basis state for the given occupation numbers. Repeated creation
/// operators carry the 1/sqrt(m!) normalization per mode.
FockState basis_state(const ModeLayout& layout, const OccupationVector& counts);
FockState basis_state(const ModeLayout& layout, const std::vector<int>& counts);
FockState vacuum_state(const ModeLayout& layout);

/// Linear combination of states. Not auto-normalized; amplitudes below the
/// prune threshold are dropped, so full cancellation yields a zero state.
FockState superpose(const std::vector<std::pair<Complex, FockState>>& terms);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const FockState& a, const FockState& b);

/// Total photon number if every basis key agrees on it, nullopt for states
/// spread over several number sectors.
std::optional<int> photon_number_sector(const FockState& state);
std::optional<int> photon_number_sector(const MixedState& state);

} // namespace homsym
