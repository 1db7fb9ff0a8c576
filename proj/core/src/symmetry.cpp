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

#include "homsym/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace homsym {

namespace {

void require_normalized(const FockState& state, const char* where) {
    if (!state.is_normalized(tol::state_precondition))
        throw PreconditionError(std::string(where) + ": state is not normalized (norm = " +
                                std::to_string(state.norm()) + ")");
}

void require_two_ports(const FockState& state, const char* where) {
    if (state.layout().spatial != 2)
        throw PreconditionError(std::string(where) + ": defined for 2 spatial modes, layout is " +
                                state.layout().describe());
}

std::vector<int> permutation_of(const std::vector<int>& sigma, int n, const char* where) {
    if (static_cast<int>(sigma.size()) != n)
        throw PreconditionError(std::string(where) + ": permutation length mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw PreconditionError(std::string(where) + ": not a bijection of [0, n)");
        seen[static_cast<std::size_t>(v)] = true;
    }
    return sigma;
}

std::vector<int> iterate_shift(int n, int shifts) {
    // sigma(j) = (j - shifts) mod n
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        sigma[static_cast<std::size_t>(j)] = ((j - shifts) % n + n) % n;
    return sigma;
}

} // namespace

std::vector<int> cyclic_shift_permutation(int n) {
    if (n < 1)
        throw PreconditionError("cyclic_shift_permutation: n must be positive");
    return iterate_shift(n, 1);
}

std::vector<int> exchange_permutation() { return {1, 0}; }

FockState apply_spatial_permutation(const FockState& state, const std::vector<int>& sigma) {
    const ModeLayout& layout = state.layout();
    permutation_of(sigma, layout.spatial, "apply_spatial_permutation");
    const int d = layout.internal;
    FockState::AmplitudeMap out;
    for (const auto& [key, amp] : state.amplitudes()) {
        std::vector<int> relabeled(static_cast<std::size_t>(layout.flat_size()), 0);
        for (int s = 0; s < layout.spatial; ++s)
            for (int i = 0; i < d; ++i)
                relabeled[static_cast<std::size_t>(sigma[static_cast<std::size_t>(s)] * d + i)] =
                    key[s * d + i];
        out.emplace(OccupationVector(std::move(relabeled)), amp);
    }
    return FockState(layout, std::move(out));
}

Complex permutation_expectation(const FockState& state, const std::vector<int>& sigma) {
    require_normalized(state, "permutation_expectation");
    return inner_product(state, apply_spatial_permutation(state, sigma));
}

Complex exchange_expectation(const FockState& state) {
    require_two_ports(state, "exchange_expectation");
    const Complex value = permutation_expectation(state, exchange_permutation());
    if (std::abs(value.imag()) > tol::identity_check)
        throw IdentityError("exchange_expectation: imaginary residue " +
                            std::to_string(value.imag()) + " on a Hermitian operator");
    if (std::abs(value) > 1.0 + tol::identity_check)
        throw IdentityError("exchange_expectation: |<S>| exceeds 1");
    return value;
}

std::vector<Complex> cyclic_expectations(const FockState& state) {
    require_normalized(state, "cyclic_expectations");
    const int n = state.layout().spatial;
    std::vector<Complex> values(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        values[static_cast<std::size_t>(l)] =
            inner_product(state, apply_spatial_permutation(state, iterate_shift(n, l)));
        if (std::abs(values[static_cast<std::size_t>(l)]) > 1.0 + tol::identity_check)
            throw IdentityError("cyclic_expectations: |<P^l>| exceeds 1 at l = " +
                                std::to_string(l));
    }
    return values;
}

std::vector<double> residue_weights(const FockState& state) {
    const int n = state.layout().spatial;
    const auto expectations = cyclic_expectations(state);
    const auto roots = unit_roots(n);
    std::vector<double> weights(static_cast<std::size_t>(n));
    CompensatedSum total;
    for (int j = 0; j < n; ++j) {
        ComplexCompensatedSum acc;
        for (int l = 0; l < n; ++l) {
            const Complex root = roots[static_cast<std::size_t>(
                ((-static_cast<long long>(j) * l) % n + n) % n)];
            acc.add(root * expectations[static_cast<std::size_t>(l)]);
        }
        const Complex w = acc.value() / static_cast<double>(n);
        if (std::abs(w.imag()) > tol::identity_check)
            throw IdentityError("residue_weights: imaginary residue weight at j = " +
                                std::to_string(j));
        if (w.real() < -tol::identity_check || w.real() > 1.0 + tol::identity_check)
            throw IdentityError("residue_weights: weight outside [0, 1] at j = " +
                                std::to_string(j));
        weights[static_cast<std::size_t>(j)] = std::clamp(w.real(), 0.0, 1.0);
        total.add(weights[static_cast<std::size_t>(j)]);
    }
    if (std::abs(total.value() - 1.0) > tol::identity_check)
        throw IdentityError("residue_weights: weights sum to " + std::to_string(total.value()));
    return weights;
}

FockState project_residue(const FockState& state, int j) {
    const int n = state.layout().spatial;
    if (j < 0 || j >= n)
        throw PreconditionError("project_residue: residue outside [0, n)");
    const auto roots = unit_roots(n);
    std::vector<std::pair<Complex, FockState>> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        const Complex coeff =
            roots[static_cast<std::size_t>(((-static_cast<long long>(j) * l) % n + n) % n)] /
            static_cast<double>(n);
        terms.emplace_back(coeff, apply_spatial_permutation(state, iterate_shift(n, l)));
    }
    return superpose(terms);
}

std::pair<FockState, FockState> decompose_exchange(const FockState& state) {
    require_two_ports(state, "decompose_exchange");
    const FockState swapped = apply_spatial_permutation(state, exchange_permutation());
    const Complex half{0.5, 0.0};
    FockState symmetric = superpose({{half, state}, {half, swapped}});
    FockState antisymmetric = superpose({{half, state}, {-half, swapped}});
    const double reconstruction =
        superpose({{Complex{1.0, 0.0}, symmetric},
                   {Complex{1.0, 0.0}, antisymmetric},
                   {Complex{-1.0, 0.0}, state}})
            .norm();
    if (reconstruction > 1e-12)
        throw IdentityError("decompose_exchange: parts fail to reconstruct the input, residual " +
                            std::to_string(reconstruction));
    return {std::move(symmetric), std::move(antisymmetric)};
}

ModeUnitary effective_symmetry(const ModeLayout& layout, double theta, double phi) {
    if (layout.spatial != 2)
        throw PreconditionError("effective_symmetry: defined for 2 spatial modes");
    const double angle = theta + phi;
    const Complex forward{std::cos(angle), std::sin(angle)};
    Eigen::MatrixXcd m(2, 2);
    m(0, 0) = 0.0;
    m(0, 1) = std::conj(forward);
    m(1, 0) = forward;
    m(1, 1) = 0.0;
    ModeUnitary u = ModeUnitary::from_spatial(layout, m);
    // Phased swap: exact relabeling applies.
    ModeUnitary::Monomial mono;
    const int d = layout.internal;
    mono.row.resize(static_cast<std::size_t>(2 * d));
    mono.phase.resize(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        mono.row[static_cast<std::size_t>(i)] = d + i;
        mono.phase[static_cast<std::size_t>(i)] = forward;
        mono.row[static_cast<std::size_t>(d + i)] = i;
        mono.phase[static_cast<std::size_t>(d + i)] = std::conj(forward);
    }
    u.monomial_ = std::move(mono);
    return u;
}

Complex mixed_symmetry_measure(const MixedState& rho, const std::vector<int>& sigma) {
    permutation_of(sigma, rho.layout().spatial, "mixed_symmetry_measure");
    ComplexCompensatedSum acc;
    for (const auto& [weight, component] : rho.components())
        acc.add(weight * permutation_expectation(component, sigma));
    const Complex value = acc.value();
    if (std::abs(value) > 1.0 + tol::identity_check)
        throw IdentityError("mixed_symmetry_measure: |tr(rho P)| exceeds 1");
    return value;
}

std::vector<std::vector<int>> cycle_decomposition(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    permutation_of(sigma, n, "cycle_decomposition");
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < n; ++start) {
        if (visited[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> cycle;
        int current = start;
        do {
            visited[static_cast<std::size_t>(current)] = true;
            cycle.push_back(current);
            current = sigma[static_cast<std::size_t>(current)];
        } while (current != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

ModeUnitary block_dft_unitary(const ModeLayout& layout, const std::vector<int>& sigma) {
    const int n = layout.spatial;
    const auto cycles = cycle_decomposition(
        permutation_of(sigma, n, "block_dft_unitary"));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& cycle : cycles) {
        const int len = static_cast<int>(cycle.size());
        const auto roots = unit_roots(len);
        const double scale = 1.0 / std::sqrt(static_cast<double>(len));
        for (int a = 0; a < len; ++a)
            for (int b = 0; b < len; ++b)
                m(cycle[static_cast<std::size_t>(a)], cycle[static_cast<std::size_t>(b)]) =
                    roots[static_cast<std::size_t>((static_cast<long long>(a) * b) % len)] * scale;
    }
    return ModeUnitary::from_spatial(layout, m);
}

SymmetryReport symmetry_report(const FockState& state) {
    const int n = state.layout().spatial;
    SymmetryReport report;
    report.residue_weights = residue_weights(state);
    report.expectation = n == 2 ? exchange_expectation(state)
                                : permutation_expectation(state, cyclic_shift_permutation(n));
    report.symmetric_weight = report.residue_weights[0];
    report.antisymmetric_weight =
        n % 2 == 0 ? report.residue_weights[static_cast<std::size_t>(n / 2)] : 0.0;
    return report;
}

} // namespace homsym
