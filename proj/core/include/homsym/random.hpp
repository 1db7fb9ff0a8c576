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
#include <cstdint>
#include <random>

#include "homsym/fock.hpp"

// Seeded random inputs for the verification battery and the test suites.
// Only the mt19937_64 engine output is consumed (the standard distributions
// are implementation-defined), so sequences are reproducible everywhere.
namespace homsym::rnd {

class Source {
public:
    explicit Source(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double normal();
    Complex complex_normal() { return {normal(), normal()}; }
    int uniform_int(int bound);  // in [0, bound)

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Normalized state with `terms` distinct keys in the N-photon sector.
FockState random_state(Source& source, const ModeLayout& layout, int photons, int terms);

/// Haar-ish random unitary from the QR decomposition of a Ginibre matrix.
Eigen::MatrixXcd random_unitary(Source& source, int dim);

Eigen::MatrixXcd random_hermitian(Source& source, int dim);

std::vector<int> random_permutation(Source& source, int n);

/// Normalized omega^j eigenstate of the cyclic shift, built by projecting
/// random states until the projection has enough weight.
FockState random_shift_eigenstate(Source& source, const ModeLayout& layout, int photons,
                                  int residue, int terms);

} // namespace homsym::rnd
