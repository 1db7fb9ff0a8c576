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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "homsym/fock.hpp"
#include "homsym/linops.hpp"

namespace homsym {

/// Photon-number-resolving outcome statistics at the interferometer output.
/// Keys are per-port photon counts; internal modes are traced out because the
/// detectors do not resolve them. `internal_resolved` keeps the raw
/// occupation-level probabilities when diagnostics ask for them.
struct OutcomeDistribution {
    std::map<std::vector<int>, double> probabilities;
    std::optional<std::map<OccupationVector, double>> internal_resolved;

    double probability(const std::vector<int>& spatial_counts) const;
};

/// Exact outcome distribution of apply(u, state).
OutcomeDistribution output_distribution(const FockState& state, const ModeUnitary& u,
                                        bool keep_internal = false);
OutcomeDistribution output_distribution(const MixedState& state, const ModeUnitary& u,
                                        bool keep_internal = false);

/// P[sum_k k*m_k = r (mod n)] at the output of u, for r = 0..n-1.
std::vector<double> residue_sum_distribution(const FockState& state, const ModeUnitary& u);
std::vector<double> residue_sum_distribution(const MixedState& state, const ModeUnitary& u);

/// Probability that the two photons of a two-photon, two-port state leave
/// the Hadamard splitter through different ports. Computed from the output
/// distribution and cross-checked against (1 - <S>)/2.
double coincidence_probability(const FockState& state);

/// Probability of an even photon count in port 1 behind the Hadamard
/// splitter; cross-checked against (1 + <S>)/2.
double parity_even_probability(const FockState& state);

/// Probability that sum_k k*m_k = -j (mod n) behind the n-port DFT;
/// cross-checked against the residue weight <Pi_j> of the input. j = 0 is
/// the generalized suppression law.
double modular_sum_probability(const FockState& state, int j);

/// Weighted residue-j probability of a mixed state behind interferometer u.
/// When u is the DFT this equals (1/n) sum_l omega^{-jl} tr(rho P^l), which
/// is verified in-op.
double mixed_output_statistics(const MixedState& rho, const ModeUnitary& u, int j);

/// Seeded draws from an exact distribution, for demonstrations only; the
/// identities themselves are equalities, not statistical statements.
std::map<std::vector<int>, std::int64_t> sample_outcomes(const OutcomeDistribution& dist,
                                                         std::int64_t samples, std::uint64_t seed);

} // namespace homsym
