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
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "homsym/fock.hpp"
#include "homsym/linops.hpp"

namespace homsym {

/// Hermitian matrix h on the flattened mode space, standing for the
/// photon-number-conserving generator H = sum_{jk} h(j,k) a_j^dag a_k.
/// Covers phases, time delays and their collective/alternating combinations.
class OneBodyGenerator {
public:
    OneBodyGenerator(ModeLayout layout, Eigen::MatrixXcd h);

    const ModeLayout& layout() const { return layout_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

private:
    ModeLayout layout_;
    Eigen::MatrixXcd matrix_;
};

/// Diagonal generator with weight spatial_weights[s] on every internal mode
/// of port s (a per-port phase).
OneBodyGenerator mode_phase_generator(const ModeLayout& layout,
                                      const std::vector<double>& spatial_weights);

/// Collective delay: every port carries the same internal spectrum
/// internal_weights; symmetric under the cyclic shift.
OneBodyGenerator collective_delay_generator(const ModeLayout& layout,
                                            const std::vector<double>& internal_weights);

/// Alternating delay: port s weighted by (-1)^s; antisymmetric under the
/// cyclic shift when the port count is even.
OneBodyGenerator alternating_delay_generator(const ModeLayout& layout,
                                             const std::vector<double>& internal_weights);

/// Number operator of one spatial port.
OneBodyGenerator number_generator(const ModeLayout& layout, int spatial_mode);

/// One-body matrix of P^l H P^{-l}: the generator with port labels cyclically
/// shifted l times.
OneBodyGenerator conjugate_by_cyclic_shift(const OneBodyGenerator& g, int shifts);

/// H|psi> via ladder algebra on the sparse amplitude map.
FockState apply_one_body(const OneBodyGenerator& g, const FockState& state);

double one_body_expectation(const OneBodyGenerator& g, const FockState& state);
double one_body_variance(const OneBodyGenerator& g, const FockState& state);

/// The mode unitary of exp(i kappa H); its matrix is exp(i kappa h).
ModeUnitary evolution_unitary(const OneBodyGenerator& g, double kappa);

/// exp(i kappa H)|psi>.
FockState evolve(const FockState& state, const OneBodyGenerator& g, double kappa);
MixedState evolve(const MixedState& state, const OneBodyGenerator& g, double kappa);

/// Pure-state quantum Fisher information, 4 Var(H).
double qfi(const FockState& state, const OneBodyGenerator& g);

/// Symmetry class of a probe with respect to the cyclic shift P and the
/// residue projector Pi_j of its protocol.
enum class ProbeSymmetry {
    PlusEigenstate,   // P psi = +psi
    MinusEigenstate,  // P psi = -psi (needs even port count)
    ProjectorNull,    // Pi_j psi = 0 without being a +-1 eigenstate
    None,
};

/// One estimation experiment: probe -> exp(i kappa H) -> interferometer ->
/// photon-number detection coarse-grained to two outcomes, residue hit
/// (sum_k k*m_k = -j mod n) versus miss.
///
/// The probe's symmetry class is validated numerically at construction
/// (tolerance 1e-8 on ||P psi -+ psi||); mixed probes instead record
/// tr(rho P) and tr(rho Pi_j).
class EstimationProtocol {
public:
    EstimationProtocol(FockState probe, OneBodyGenerator generator, ModeUnitary interferometer,
                       int residue = 0);
    EstimationProtocol(MixedState probe, OneBodyGenerator generator, ModeUnitary interferometer,
                       int residue = 0);

    const ModeLayout& layout() const;
    bool mixed() const { return mixed_probe_.has_value(); }
    const FockState& pure_probe() const;
    const MixedState& mixed_probe() const;
    const OneBodyGenerator& generator() const { return generator_; }
    const ModeUnitary& interferometer() const { return interferometer_; }
    int residue() const { return residue_; }

    ProbeSymmetry probe_symmetry() const { return probe_symmetry_; }
    Complex mixed_shift_trace() const;      // tr(rho P)
    double mixed_projector_trace() const;   // tr(rho Pi_j)

    /// (hit, miss) outcome probabilities at parameter value kappa.
    std::pair<double, double> outcome_probabilities(double kappa) const;

private:
    void finalize();
    std::pair<double, double> pure_outcome_probabilities(const FockState& probe,
                                                         double kappa) const;

    std::optional<FockState> pure_probe_;
    std::optional<MixedState> mixed_probe_;
    OneBodyGenerator generator_;
    ModeUnitary interferometer_;
    int residue_;
    ProbeSymmetry probe_symmetry_ = ProbeSymmetry::None;
    Complex mixed_shift_trace_{0.0, 0.0};
    double mixed_projector_trace_ = 0.0;

    // exp(i kappa h) assembled from the cached eigendecomposition of h.
    Eigen::VectorXd evals_;
    Eigen::MatrixXcd evecs_;
    Eigen::MatrixXcd composed_left_;  // interferometer * evecs
};

struct FisherPoint {
    double kappa;
    double fisher;
    double p_hit;
};

/// Two-outcome Fisher information on a kappa grid, from centered finite
/// differences with step max(1e-4, kappa/10).
std::vector<FisherPoint> fisher_two_outcome(const EstimationProtocol& protocol,
                                            const std::vector<double>& kappa_grid);
FisherPoint fisher_two_outcome_at(const EstimationProtocol& protocol, double kappa);

/// kappa -> 0 limit of the finite-difference Fisher information by Richardson
/// extrapolation over kappa0, kappa0/2, ..., kappa0/2^{levels-1}.
double fisher_kappa_zero(const EstimationProtocol& protocol, double kappa0 = 0.08,
                         int levels = 4);

/// Closed-form kappa -> 0 Fisher information, 4 Var(i[H, Pi_j]), computed
/// with dense desk-scale operators. Requires Pi_j psi = psi or Pi_j psi = 0.
double fisher_limit_commutator(const EstimationProtocol& protocol);

/// The two variance expressions adapted to shift eigenstates (residue-0
/// outcome rule):
///
///     (4/n^2) Var(n H - sum_l P^l H P^{-l})        for P psi = +psi,
///     (4/n^2) Var(sum_l (-1)^l P^l H P^{-l})       for P psi = -psi, n even.
///
/// Equals fisher_limit_commutator on its domain.
double fisher_symmetry_adapted(const EstimationProtocol& protocol);

/// Mixed-probe kappa -> 0 Fisher information, the weighted sum of the
/// per-component commutator variances. Requires tr(rho Pi_j) in {0, 1}; when
/// tr(rho P) = +-1 the weighted symmetry-adapted variances are verified
/// in-op, and the value equals the SLD quantum Fisher information of the
/// effective generator.
double fisher_mixed(const EstimationProtocol& protocol);

/// One-body matrix of the effective generator whose QFI the protocol
/// saturates: H - (1/n) sum_l P^l H P^{-l} for +1 probes,
/// (1/n) sum_l (-1)^l P^l H P^{-l} for -1 probes.
Eigen::MatrixXcd effective_generator_matrix(const OneBodyGenerator& g, ProbeSymmetry symmetry);

/// Send a definite-residue state through the DFT to impose the shift
/// symmetry: an input whose keys all satisfy sum_k k*m_k = r (mod n) comes
/// out an omega^r eigenstate of P. The eigenstate property is verified
/// in-op to 1e-10.
FockState symmetrize_by_predft(const FockState& state);

} // namespace homsym
