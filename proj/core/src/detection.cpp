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

#include "homsym/detection.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "homsym/symmetry.hpp"

namespace homsym {

namespace {

void require_normalized(const FockState& state, const char* where) {
    if (!state.is_normalized(tol::state_precondition))
        throw PreconditionError(std::string(where) + ": state is not normalized");
}

int residue_of(const std::vector<int>& spatial_counts, int n) {
    long long weighted = 0;
    for (int k = 0; k < n; ++k)
        weighted += static_cast<long long>(k) * spatial_counts[static_cast<std::size_t>(k)];
    return static_cast<int>(weighted % n);
}

bool is_dft_matrix(const ModeUnitary& u) {
    if (!u.spatial_only())
        return false;
    const ModeUnitary reference = dft_unitary(u.layout());
    return (u.matrix() - reference.matrix()).cwiseAbs().maxCoeff() < 1e-12;
}

} // namespace

double OutcomeDistribution::probability(const std::vector<int>& spatial_counts) const {
    auto it = probabilities.find(spatial_counts);
    return it == probabilities.end() ? 0.0 : it->second;
}

OutcomeDistribution output_distribution(const FockState& state, const ModeUnitary& u,
                                        bool keep_internal) {
    require_normalized(state, "output_distribution");
    const FockState out = apply_to_state(u, state);
    const ModeLayout& layout = out.layout();

    OutcomeDistribution dist;
    std::map<std::vector<int>, CompensatedSum> acc;
    if (keep_internal)
        dist.internal_resolved.emplace();
    for (const auto& [key, amp] : out.amplitudes()) {
        const double p = std::norm(amp);
        acc[key.spatial_totals(layout)].add(p);
        if (keep_internal)
            (*dist.internal_resolved)[key] += p;
    }
    CompensatedSum total;
    for (const auto& [counts, sum] : acc) {
        dist.probabilities.emplace(counts, sum.value());
        total.add(sum.value());
    }
    if (std::abs(total.value() - 1.0) > tol::identity_check)
        throw IdentityError("output_distribution: probabilities sum to " +
                            std::to_string(total.value()));
    return dist;
}

OutcomeDistribution output_distribution(const MixedState& state, const ModeUnitary& u,
                                        bool keep_internal) {
    std::map<std::vector<int>, CompensatedSum> acc;
    std::map<OccupationVector, CompensatedSum> internal_acc;
    for (const auto& [weight, component] : state.components()) {
        const OutcomeDistribution part = output_distribution(component, u, keep_internal);
        for (const auto& [counts, p] : part.probabilities)
            acc[counts].add(weight * p);
        if (keep_internal)
            for (const auto& [key, p] : *part.internal_resolved)
                internal_acc[key].add(weight * p);
    }
    OutcomeDistribution dist;
    for (const auto& [counts, sum] : acc)
        dist.probabilities.emplace(counts, sum.value());
    if (keep_internal) {
        dist.internal_resolved.emplace();
        for (const auto& [key, sum] : internal_acc)
            dist.internal_resolved->emplace(key, sum.value());
    }
    return dist;
}

std::vector<double> residue_sum_distribution(const FockState& state, const ModeUnitary& u) {
    const int n = state.layout().spatial;
    const OutcomeDistribution dist = output_distribution(state, u);
    std::vector<CompensatedSum> acc(static_cast<std::size_t>(n));
    for (const auto& [counts, p] : dist.probabilities)
        acc[static_cast<std::size_t>(residue_of(counts, n))].add(p);
    std::vector<double> result(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        result[static_cast<std::size_t>(r)] = acc[static_cast<std::size_t>(r)].value();
    return result;
}

std::vector<double> residue_sum_distribution(const MixedState& state, const ModeUnitary& u) {
    const int n = state.layout().spatial;
    std::vector<CompensatedSum> acc(static_cast<std::size_t>(n));
    for (const auto& [weight, component] : state.components()) {
        const auto part = residue_sum_distribution(component, u);
        for (int r = 0; r < n; ++r)
            acc[static_cast<std::size_t>(r)].add(weight * part[static_cast<std::size_t>(r)]);
    }
    std::vector<double> result(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        result[static_cast<std::size_t>(r)] = acc[static_cast<std::size_t>(r)].value();
    return result;
}

double coincidence_probability(const FockState& state) {
    if (state.layout().spatial != 2)
        throw PreconditionError("coincidence_probability: defined for 2 spatial modes");
    const auto sector = photon_number_sector(state);
    if (!sector || *sector != 2)
        throw PreconditionError("coincidence_probability: state is not in the two-photon sector");
    const OutcomeDistribution dist = output_distribution(state, bs_unitary(state.layout(), 0, 0, 0));
    const double detection = dist.probability({1, 1});
    const double symmetry = 0.5 * (1.0 - exchange_expectation(state).real());
    if (std::abs(detection - symmetry) > tol::identity_check)
        throw IdentityError("coincidence_probability: detection side " + std::to_string(detection) +
                            " disagrees with (1 - <S>)/2 = " + std::to_string(symmetry));
    return detection;
}

double parity_even_probability(const FockState& state) {
    if (state.layout().spatial != 2)
        throw PreconditionError("parity_even_probability: defined for 2 spatial modes");
    const OutcomeDistribution dist = output_distribution(state, bs_unitary(state.layout(), 0, 0, 0));
    CompensatedSum even;
    for (const auto& [counts, p] : dist.probabilities)
        if (counts[1] % 2 == 0)
            even.add(p);
    const double detection = even.value();
    const double symmetry = 0.5 * (1.0 + exchange_expectation(state).real());
    if (std::abs(detection - symmetry) > tol::identity_check)
        throw IdentityError("parity_even_probability: detection side " + std::to_string(detection) +
                            " disagrees with (1 + <S>)/2 = " + std::to_string(symmetry));
    return detection;
}

double modular_sum_probability(const FockState& state, int j) {
    const int n = state.layout().spatial;
    if (j < 0 || j >= n)
        throw PreconditionError("modular_sum_probability: residue outside [0, n)");
    const auto residues = residue_sum_distribution(state, dft_unitary(state.layout()));
    // P[sum k m_k = -j (mod n)] probes the omega^j eigenspace of the shift.
    const double detection = residues[static_cast<std::size_t>((n - j) % n)];
    const double symmetry = residue_weights(state)[static_cast<std::size_t>(j)];
    if (std::abs(detection - symmetry) > tol::identity_check)
        throw IdentityError("modular_sum_probability: detection side " + std::to_string(detection) +
                            " disagrees with <Pi_j> = " + std::to_string(symmetry));
    return detection;
}

double mixed_output_statistics(const MixedState& rho, const ModeUnitary& u, int j) {
    const int n = rho.layout().spatial;
    if (j < 0 || j >= n)
        throw PreconditionError("mixed_output_statistics: residue outside [0, n)");
    require_same_layout(rho.layout(), u.layout(), "mixed_output_statistics");
    const auto residues = residue_sum_distribution(rho, u);
    const double detection = residues[static_cast<std::size_t>((n - j) % n)];
    if (is_dft_matrix(u)) {
        const auto roots = unit_roots(n);
        std::vector<ComplexCompensatedSum> shift_traces(static_cast<std::size_t>(n));
        for (const auto& [weight, component] : rho.components()) {
            const auto expectations = cyclic_expectations(component);
            for (int l = 0; l < n; ++l)
                shift_traces[static_cast<std::size_t>(l)].add(weight *
                                                              expectations[static_cast<std::size_t>(l)]);
        }
        ComplexCompensatedSum acc;
        for (int l = 0; l < n; ++l)
            acc.add(roots[static_cast<std::size_t>(((-static_cast<long long>(j) * l) % n + n) % n)] *
                    shift_traces[static_cast<std::size_t>(l)].value());
        const double symmetry = (acc.value() / static_cast<double>(n)).real();
        if (std::abs(detection - symmetry) > tol::identity_check)
            throw IdentityError("mixed_output_statistics: detection side disagrees with "
                                "(1/n) sum_l omega^{-jl} tr(rho P^l)");
    }
    return detection;
}

std::map<std::vector<int>, std::int64_t> sample_outcomes(const OutcomeDistribution& dist,
                                                         std::int64_t samples, std::uint64_t seed) {
    if (samples < 0)
        throw PreconditionError("sample_outcomes: negative sample count");
    std::vector<std::pair<double, const std::vector<int>*>> cumulative;
    cumulative.reserve(dist.probabilities.size());
    double running = 0.0;
    for (const auto& [counts, p] : dist.probabilities) {
        running += p;
        cumulative.emplace_back(running, &counts);
    }
    std::map<std::vector<int>, std::int64_t> histogram;
    std::mt19937_64 engine(seed);
    for (std::int64_t s = 0; s < samples; ++s) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * running;
        auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u,
                                   [](const auto& entry, double value) { return entry.first < value; });
        if (it == cumulative.end())
            it = std::prev(cumulative.end());
        ++histogram[*it->second];
    }
    return histogram;
}

} // namespace homsym
