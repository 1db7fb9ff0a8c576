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

#include <complex>
#include <string>
#include <utility>

#include "homsym/errors.hpp"

namespace homsym {

using Complex = std::complex<double>;

/// Mode bookkeeping: `spatial` interferometer ports, each carrying `internal`
/// orthonormal internal modes (frequency bins, polarization, ...). A photon
/// mode is the pair (s, i); its flattened index is s * internal + i, a
/// bijection onto [0, spatial * internal).
struct ModeLayout {
    int spatial = 0;
    int internal = 1;

    int flat_size() const { return spatial * internal; }

    int flatten(int s, int i) const {
        if (s < 0 || s >= spatial || i < 0 || i >= internal)
            throw PreconditionError("mode index (" + std::to_string(s) + "," + std::to_string(i) +
                                    ") outside layout " + describe());
        return s * internal + i;
    }

    std::pair<int, int> unflatten(int flat) const {
        if (flat < 0 || flat >= flat_size())
            throw PreconditionError("flat mode index " + std::to_string(flat) +
                                    " outside layout " + describe());
        return {flat / internal, flat % internal};
    }

    std::string describe() const {
        return "(n=" + std::to_string(spatial) + ", d=" + std::to_string(internal) + ")";
    }

    bool operator==(const ModeLayout&) const = default;
};

/// A single photon mode addressed as (spatial port, internal mode).
struct ModeIndex {
    int spatial = 0;
    int internal = 0;

    bool operator==(const ModeIndex&) const = default;
};

inline ModeLayout make_layout(int spatial, int internal = 1) {
    if (spatial < 1 || internal < 1)
        throw PreconditionError("mode layout needs at least one spatial and one internal mode");
    return ModeLayout{spatial, internal};
}

inline void require_same_layout(const ModeLayout& a, const ModeLayout& b, const char* where) {
    if (!(a == b))
        throw PreconditionError(std::string(where) + ": mode layout mismatch, " + a.describe() +
                                " vs " + b.describe());
}

} // namespace homsym
