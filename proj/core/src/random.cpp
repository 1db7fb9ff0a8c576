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

#include "homsym/random.hpp"

#include <cmath>
#include <numbers>

#include "homsym/symmetry.hpp"

namespace homsym::rnd {

double Source::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on raw engine bits keeps the sequence library-independent.
    double u1 = uniform();
    while (u1 <= 0.0)
        u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

int Source::uniform_int(int bound) {
    if (bound <= 0)
        throw PreconditionError("uniform_int: bound must be positive");
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
}

namespace {

OccupationVector random_occupation(Source& source, const ModeLayout& layout, int photons) {
    std::vector<int> counts(static_cast<std::size_t>(layout.flat_size()), 0);
    for (int p = 0; p < photons; ++p)
        ++counts[static_cast<std::size_t>(source.uniform_int(layout.flat_size()))];
    return OccupationVector(std::move(counts));
}

} // namespace

FockState random_state(Source& source, const ModeLayout& layout, int photons, int terms) {
    if (terms < 1)
        throw PreconditionError("random_state: need at least one term");
    FockState::AmplitudeMap map;
    int attempts = 0;
    while (static_cast<int>(map.size()) < terms) {
        map[random_occupation(source, layout, photons)] = source.complex_normal();
        if (++attempts > 100 * terms)
            break;  // sector smaller than the requested key count
    }
    return FockState(layout, std::move(map)).normalized();
}

Eigen::MatrixXcd random_unitary(Source& source, int dim) {
    Eigen::MatrixXcd ginibre(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            ginibre(r, c) = source.complex_normal();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
    Eigen::MatrixXcd q = qr.householderQ();
    // Fix the phase convention so the factorization is unique-ish.
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        const Complex diag = r(c, c);
        if (std::abs(diag) > 0.0)
            q.col(c) *= diag / std::abs(diag);
    }
    return q;
}

Eigen::MatrixXcd random_hermitian(Source& source, int dim) {
    Eigen::MatrixXcd a(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            a(r, c) = source.complex_normal();
    return 0.5 * (a + a.adjoint());
}

std::vector<int> random_permutation(Source& source, int n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sigma[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(sigma[static_cast<std::size_t>(i)],
                  sigma[static_cast<std::size_t>(source.uniform_int(i + 1))]);
    return sigma;
}

FockState random_shift_eigenstate(Source& source, const ModeLayout& layout, int photons,
                                  int residue, int terms) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        const FockState candidate = random_state(source, layout, photons, terms);
        const FockState projected = project_residue(candidate, residue);
        if (projected.norm_sq() > 0.05)
            return projected.normalized();
    }
    throw PreconditionError("random_shift_eigenstate: eigenspace weight stayed too small");
}

} // namespace homsym::rnd
