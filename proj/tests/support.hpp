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

#include <cmath>

#include "homsym/homsym.hpp"
#include "homsym/random.hpp"

namespace homsym::testing {

inline FockState photon_pair(int internal_a, int internal_b, int d = 1) {
    const ModeLayout layout = make_layout(2, d);
    std::vector<int> counts(static_cast<std::size_t>(layout.flat_size()), 0);
    counts[static_cast<std::size_t>(layout.flatten(0, internal_a))] += 1;
    counts[static_cast<std::size_t>(layout.flatten(1, internal_b))] += 1;
    return basis_state(layout, counts);
}

/// (a0^dag(0) a1^dag(1) - a0^dag(1) a1^dag(0)) / sqrt2 on d = 2 internals.
inline FockState antisymmetric_biphoton() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return superpose({{Complex{inv_sqrt2, 0.0}, photon_pair(0, 1, 2)},
                      {Complex{-inv_sqrt2, 0.0}, photon_pair(1, 0, 2)}});
}

inline FockState one_photon_per_mode(const ModeLayout& layout, int internal = 0) {
    std::vector<int> counts(static_cast<std::size_t>(layout.flat_size()), 0);
    for (int s = 0; s < layout.spatial; ++s)
        counts[static_cast<std::size_t>(layout.flatten(s, internal))] = 1;
    return basis_state(layout, counts);
}

/// (prod_s a_s^dag(0) + prod_s a_s^dag(1)) / sqrt2: one photon per port with
/// maximal internal-mode entanglement; the collective delay has nonzero
/// variance on it.
inline FockState internal_ghz(const ModeLayout& layout) {
    const double w = 1.0 / std::sqrt(2.0);
    return superpose({{Complex{w, 0.0}, one_photon_per_mode(layout, 0)},
                      {Complex{w, 0.0}, one_photon_per_mode(layout, 1)}});
}

inline double state_distance(const FockState& a, const FockState& b) {
    return superpose({{Complex{1.0, 0.0}, a}, {Complex{-1.0, 0.0}, b}}).norm();
}

} // namespace homsym::testing
