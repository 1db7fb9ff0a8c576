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

#include "homsym/fock.hpp"

#include <cmath>

namespace homsym {

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0)
            throw PreconditionError("occupation numbers must be non-negative");
        total_ += c;
    }
}

std::vector<int> OccupationVector::spatial_totals(const ModeLayout& layout) const {
    if (size() != layout.flat_size())
        throw PreconditionError("occupation vector length " + std::to_string(size()) +
                                " does not match layout " + layout.describe());
    std::vector<int> totals(static_cast<std::size_t>(layout.spatial), 0);
    for (int flat = 0; flat < size(); ++flat)
        totals[static_cast<std::size_t>(flat / layout.internal)] += counts_[flat];
    return totals;
}

FockState::FockState(ModeLayout layout) : layout_(layout) {}

FockState::FockState(ModeLayout layout, AmplitudeMap amplitudes) : layout_(layout) {
    for (auto it = amplitudes.begin(); it != amplitudes.end();) {
        if (it->first.size() != layout_.flat_size())
            throw PreconditionError("amplitude key of length " + std::to_string(it->first.size()) +
                                    " does not match layout " + layout_.describe());
        if (std::abs(it->second) < tol::amplitude_prune) {
            it = amplitudes.erase(it);
        } else {
            ++it;
        }
    }
    amplitudes_ = std::move(amplitudes);
    CompensatedSum acc;
    for (const auto& [key, amp] : amplitudes_)
        acc.add(std::norm(amp));
    norm_sq_ = acc.value();
}

Complex FockState::amplitude(const OccupationVector& key) const {
    auto it = amplitudes_.find(key);
    return it == amplitudes_.end() ? Complex{0.0, 0.0} : it->second;
}

double FockState::norm() const { return std::sqrt(norm_sq_); }

bool FockState::is_normalized(double tolerance) const {
    return std::abs(norm() - 1.0) <= tolerance;
}

FockState FockState::normalized() const {
    if (is_zero())
        throw PreconditionError("cannot normalize a zero state");
    return scaled(Complex{1.0 / norm(), 0.0});
}

FockState FockState::scaled(Complex factor) const {
    AmplitudeMap scaled_map;
    for (const auto& [key, amp] : amplitudes_)
        scaled_map.emplace(key, amp * factor);
    return FockState(layout_, std::move(scaled_map));
}

MixedState::MixedState(const FockState& pure) : layout_(pure.layout()) {
    if (!pure.is_normalized(tol::state_precondition))
        throw PreconditionError("mixed-state component is not normalized");
    components_.push_back(Component{1.0, pure});
}

MixedState::MixedState(ModeLayout layout, std::vector<Component> components)
    : layout_(layout), components_(std::move(components)) {
    if (components_.empty())
        throw PreconditionError("mixed state needs at least one component");
    CompensatedSum weight_sum;
    for (const auto& [weight, state] : components_) {
        require_same_layout(layout_, state.layout(), "MixedState");
        if (weight < -tol::norm_check)
            throw PreconditionError("mixed-state weights must be non-negative");
        if (!state.is_normalized(tol::state_precondition))
            throw PreconditionError("mixed-state component is not normalized");
        weight_sum.add(weight);
    }
    if (std::abs(weight_sum.value() - 1.0) > tol::norm_check)
        throw PreconditionError("mixed-state weights must sum to 1, got " +
                                std::to_string(weight_sum.value()));
}

FockState basis_state(const ModeLayout& layout, const OccupationVector& counts) {
    if (counts.size() != layout.flat_size())
        throw PreconditionError("basis_state: occupation vector length " +
                                std::to_string(counts.size()) + " does not match layout " +
                                layout.describe());
    FockState::AmplitudeMap map;
    map.emplace(counts, Complex{1.0, 0.0});
    return FockState(layout, std::move(map));
}

FockState basis_state(const ModeLayout& layout, const std::vector<int>& counts) {
    return basis_state(layout, OccupationVector(counts));
}

FockState vacuum_state(const ModeLayout& layout) {
    return basis_state(layout, std::vector<int>(static_cast<std::size_t>(layout.flat_size()), 0));
}

FockState superpose(const std::vector<std::pair<Complex, FockState>>& terms) {
    if (terms.empty())
        throw PreconditionError("superpose: empty term list");
    const ModeLayout layout = terms.front().second.layout();
    FockState::AmplitudeMap map;
    for (const auto& [coeff, state] : terms) {
        require_same_layout(layout, state.layout(), "superpose");
        for (const auto& [key, amp] : state.amplitudes())
            map[key] += coeff * amp;
    }
    return FockState(layout, std::move(map));
}

Complex inner_product(const FockState& a, const FockState& b) {
    require_same_layout(a.layout(), b.layout(), "inner_product");
    // Walk the smaller map, look up in the larger; iteration over the sorted
    // keys keeps the reduction order deterministic.
    const bool a_smaller = a.term_count() <= b.term_count();
    const FockState& small = a_smaller ? a : b;
    const FockState& large = a_smaller ? b : a;
    ComplexCompensatedSum acc;
    for (const auto& [key, amp] : small.amplitudes()) {
        const Complex other = large.amplitude(key);
        if (other == Complex{0.0, 0.0})
            continue;
        if (a_smaller)
            acc.add(std::conj(amp) * other);
        else
            acc.add(std::conj(other) * amp);
    }
    return acc.value();
}

std::optional<int> photon_number_sector(const FockState& state) {
    std::optional<int> sector;
    for (const auto& [key, amp] : state.amplitudes()) {
        if (!sector) {
            sector = key.total();
        } else if (*sector != key.total()) {
            return std::nullopt;
        }
    }
    return sector.has_value() ? sector : std::optional<int>{0};
}

std::optional<int> photon_number_sector(const MixedState& state) {
    std::optional<int> sector;
    for (const auto& [weight, component] : state.components()) {
        auto s = photon_number_sector(component);
        if (!s)
            return std::nullopt;
        if (!sector)
            sector = s;
        else if (*sector != *s)
            return std::nullopt;
    }
    return sector;
}

} // namespace homsym
