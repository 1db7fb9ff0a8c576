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

// Acceptance suite: one check per release criterion, one line of output per
// criterion. Run it through ctest or directly; pass the homsym binary path
// as argv[1] so the last criterion can exercise the `verify` subcommand.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

namespace {

using namespace homsym;

struct Failure {
    std::string detail;
};

void require(bool condition, const std::string& detail) {
    if (!condition)
        throw Failure{detail};
}

std::string describe(double actual, double expected, double tolerance) {
    std::ostringstream oss;
    oss << actual << " vs " << expected << " (tol " << tolerance << ")";
    return oss.str();
}

void require_close(double actual, double expected, double tolerance, const std::string& what) {
    if (std::abs(actual - expected) > tolerance)
        throw Failure{what + ": " + describe(actual, expected, tolerance)};
}

FockState symmetric_biphoton() {
    const double w = 1.0 / std::sqrt(2.0);
    return superpose({{Complex{w, 0.0}, testing::photon_pair(0, 1, 2)},
                      {Complex{w, 0.0}, testing::photon_pair(1, 0, 2)}});
}

// ---------------------------------------------------------------------------
// 1. HOM dip and its antisymmetric reversal.
void criterion_hom_dip() {
    const FockState identical = testing::photon_pair(0, 0);
    const OutcomeDistribution dist =
        output_distribution(identical, bs_unitary(identical.layout(), 0, 0, 0));
    require_close(dist.probability({1, 1}), 0.0, 1e-10, "P(1,1) for the identical biphoton");
    require_close(dist.probability({2, 0}), 0.5, 1e-10, "P(2,0)");
    require_close(dist.probability({0, 2}), 0.5, 1e-10, "P(0,2)");
    require_close(coincidence_probability(identical), 0.0, 1e-10, "coincidence probability");
    const double exchange = exchange_expectation(identical).real();
    require_close(exchange, 1.0, 1e-10, "<S> of the identical biphoton");
    require_close(coincidence_probability(identical), 0.5 * (1.0 - exchange), 1e-10,
                  "coincidence vs (1 - <S>)/2");

    const FockState antisymmetric = testing::antisymmetric_biphoton();
    require_close(coincidence_probability(antisymmetric), 1.0, 1e-10,
                  "coincidence of the antisymmetric biphoton");
}

// ---------------------------------------------------------------------------
// 2. Detection-side and symmetry-side statistics agree on random states.
void criterion_duality() {
    rnd::Source rng(202608101ULL);
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d) {
            const ModeLayout layout = make_layout(n, d);
            const ModeUnitary dft = dft_unitary(layout);
            const ModeUnitary hadamard = n == 2 ? bs_unitary(layout, 0, 0, 0) : dft;
            for (int photons = 1; photons <= 4; ++photons) {
                const int rounds = 100 / 4;  // 100 states per (n, d) configuration
                for (int round = 0; round < rounds; ++round) {
                    const FockState psi = rnd::random_state(rng, layout, photons, 4);
                    const auto weights = residue_weights(psi);
                    const auto residues = residue_sum_distribution(psi, dft);
                    CompensatedSum weight_sum;
                    for (int j = 0; j < n; ++j) {
                        require_close(residues[static_cast<std::size_t>((n - j) % n)],
                                      weights[static_cast<std::size_t>(j)], 1e-10,
                                      "residue probability vs <Pi_j>");
                        weight_sum.add(weights[static_cast<std::size_t>(j)]);
                    }
                    require_close(weight_sum.value(), 1.0, 1e-10, "residue weights sum");
                    if (n == 2) {
                        const auto parity = residue_sum_distribution(psi, hadamard);
                        require_close(parity[0],
                                      0.5 * (1.0 + exchange_expectation(psi).real()), 1e-10,
                                      "parity-even vs (1 + <S>)/2");
                    }
                }
            }
        }
}

// ---------------------------------------------------------------------------
// 3. DFT diagonalization, the operator homomorphism, block-DFT reduction.
void criterion_dft_and_homomorphism() {
    for (int n = 2; n <= 6; ++n) {
        const ModeLayout layout = make_layout(n, 1);
        const Eigen::MatrixXcd u = dft_unitary(layout).matrix();
        const Eigen::MatrixXcd d = diagonal_phase_unitary(layout).matrix();
        const Eigen::MatrixXcd p = cyclic_permutation_unitary(layout).matrix();
        require((u * d * u.adjoint() - p).cwiseAbs().maxCoeff() < 1e-12,
                "U D U^dag != P entrywise at n = " + std::to_string(n));
    }

    rnd::Source rng(202608102ULL);
    for (int d = 1; d <= 2; ++d) {
        const ModeLayout layout = make_layout(3, d);
        for (int round = 0; round < 10; ++round) {
            const ModeUnitary m =
                ModeUnitary::from_full(layout, rnd::random_unitary(rng, layout.flat_size()));
            const ModeUnitary n_u =
                ModeUnitary::from_full(layout, rnd::random_unitary(rng, layout.flat_size()));
            const FockState psi = rnd::random_state(rng, layout, 2, 4);
            const double deviation = testing::state_distance(
                apply_to_state(compose(m, n_u), psi), apply_to_state(m, apply_to_state(n_u, psi)));
            require(deviation < 1e-10, "state-level homomorphism deviates by " +
                                           std::to_string(deviation));
        }
    }

    for (int n = 4; n <= 7; ++n) {
        const ModeLayout layout = make_layout(n, 1);
        for (int round = 0; round < 10; ++round) {
            const auto sigma = rnd::random_permutation(rng, n);
            const Eigen::MatrixXcd p = permutation_unitary(layout, sigma).matrix();
            const Eigen::MatrixXcd b = block_dft_unitary(layout, sigma).matrix();
            const Eigen::MatrixXcd diag = b.adjoint() * p * b;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (r != c)
                        require(std::abs(diag(r, c)) < 1e-10,
                                "block DFT leaves off-diagonal weight");
        }
    }
}

// ---------------------------------------------------------------------------
// 4. Dense residue projector algebra.
void criterion_projector_algebra() {
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int photons = 1; photons <= 3; ++photons) {
                const oracle::DenseSectorBasis basis(make_layout(n, d), photons);
                Eigen::MatrixXcd sum =
                    Eigen::MatrixXcd::Zero(basis.dimension(), basis.dimension());
                std::vector<Eigen::MatrixXcd> projectors;
                for (int j = 0; j < n; ++j) {
                    projectors.push_back(oracle::dense_projector_residue(basis, j));
                    const Eigen::MatrixXcd& pj = projectors.back();
                    require((pj * pj - pj).cwiseAbs().maxCoeff() < 1e-9,
                            "projector not idempotent");
                    sum += pj;
                }
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < j; ++k)
                        require((projectors[static_cast<std::size_t>(j)] *
                                 projectors[static_cast<std::size_t>(k)])
                                        .cwiseAbs()
                                        .maxCoeff() < 1e-9,
                                "projectors not mutually orthogonal");
                require((sum - Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension()))
                                .cwiseAbs()
                                .maxCoeff() < 1e-9,
                        "projectors do not resolve the identity");
            }
}

struct NamedProtocol {
    std::string name;
    EstimationProtocol protocol;
    double quantum_limit;
};

std::vector<NamedProtocol> admissible_protocols(rnd::Source& rng) {
    std::vector<NamedProtocol> protocols;
    {
        const ModeLayout layout = make_layout(2, 2);
        const OneBodyGenerator alternating = alternating_delay_generator(layout, {0.3, 1.1});
        const FockState minus_probe = testing::antisymmetric_biphoton();
        protocols.push_back({"n=2 antisymmetric probe, alternating delay",
                             EstimationProtocol(minus_probe, alternating,
                                                bs_unitary(layout, 0, 0, 0)),
                             qfi(minus_probe, alternating)});
        const FockState plus_probe = symmetric_biphoton();
        protocols.push_back({"n=2 symmetric probe, alternating delay",
                             EstimationProtocol(plus_probe, alternating,
                                                bs_unitary(layout, 0, 0, 0)),
                             qfi(plus_probe, alternating)});
    }
    {
        const ModeLayout layout = make_layout(4, 2);
        const FockState probe =
            symmetrize_by_predft(basis_state(layout, {1, 0, 0, 1, 1, 0, 0, 1}));
        const OneBodyGenerator omega_prime = alternating_delay_generator(layout, {0.0, 1.0});
        require(qfi(probe, omega_prime) > 0.1, "n=4 protocol degenerated to zero QFI");
        protocols.push_back({"n=4 pre-DFT probe, alternating collective delay",
                             EstimationProtocol(probe, omega_prime, dft_unitary(layout)),
                             qfi(probe, omega_prime)});
    }
    {
        const ModeLayout layout = make_layout(3, 1);
        const FockState probe = rnd::random_shift_eigenstate(rng, layout, 2, 0, 4);
        const OneBodyGenerator g(layout, rnd::random_hermitian(rng, 3));
        protocols.push_back({"n=3 random symmetric probe, random generator",
                             EstimationProtocol(probe, g, dft_unitary(layout)),
                             qfi(probe, g)});
    }
    return protocols;
}

// ---------------------------------------------------------------------------
// 5. The metrology consistency triangle and the optimality certificates.
void criterion_consistency_triangle() {
    rnd::Source rng(202608105ULL);
    for (auto& [name, protocol, quantum_limit] : admissible_protocols(rng)) {
        const double adapted = fisher_symmetry_adapted(protocol);
        const double commutator = fisher_limit_commutator(protocol);
        require_close(adapted, commutator, 1e-9 * std::max(1.0, std::abs(adapted)),
                      name + ": adapted vs commutator variance");
        const double extrapolated = fisher_kappa_zero(protocol);
        require(std::abs(extrapolated - adapted) <= 1e-3 * std::max(1.0, std::abs(adapted)),
                name + ": kappa->0 extrapolation " + describe(extrapolated, adapted, 1e-3));
    }

    // Antisymmetric generators saturate the quantum limit on +1 and -1 probes.
    const ModeLayout layout = make_layout(2, 2);
    const OneBodyGenerator alternating = alternating_delay_generator(layout, {0.3, 1.1});
    const Eigen::MatrixXcd p = cyclic_permutation_unitary(layout).matrix();
    require((p * alternating.matrix() * p.adjoint() + alternating.matrix())
                    .cwiseAbs()
                    .maxCoeff() < 1e-12,
            "alternating delay is not shift-antisymmetric");
    for (const FockState& probe : {testing::antisymmetric_biphoton(), symmetric_biphoton()}) {
        const EstimationProtocol protocol(probe, alternating, bs_unitary(layout, 0, 0, 0));
        require_close(fisher_symmetry_adapted(protocol), qfi(probe, alternating), 1e-9,
                      "antisymmetric generator misses the QFI");
        // Eq.-(8) form: the n = 2 adapted variance is Var(H - SHS).
        const OneBodyGenerator difference(
            layout, alternating.matrix() - conjugate_by_cyclic_shift(alternating, 1).matrix());
        require_close(fisher_symmetry_adapted(protocol), one_body_variance(difference, probe),
                      1e-9, "n = 2 reduction to Var(H - SHS)");
    }

    // A shift-symmetric collective delay on a symmetric probe is blind, even
    // though its QFI is far from zero.
    const ModeLayout three = make_layout(3, 2);
    const FockState plus_probe = symmetrize_by_predft(testing::internal_ghz(three));
    const OneBodyGenerator omega = collective_delay_generator(three, {0.4, 1.7});
    const EstimationProtocol blind(plus_probe, omega, dft_unitary(three));
    require(blind.probe_symmetry() == ProbeSymmetry::PlusEigenstate,
            "n = 3 pre-DFT probe should be shift-symmetric");
    require(qfi(plus_probe, omega) > 0.1, "blind-spot case degenerated to zero QFI");
    require(std::abs(fisher_symmetry_adapted(blind)) < 1e-9,
            "symmetric generator should give zero Fisher information");
    require(std::abs(fisher_limit_commutator(blind)) < 1e-9,
            "commutator variance should vanish for a symmetric generator");
}

// ---------------------------------------------------------------------------
// 6. The Cramer-Rao ordering FI <= QFI on every sweep point.
void criterion_fi_bounded_by_qfi() {
    rnd::Source rng(202608106ULL);
    std::vector<double> grid;
    for (int i = 1; i <= 21; ++i)
        grid.push_back(0.5 * i / 21.0);

    for (auto& [name, protocol, quantum_limit] : admissible_protocols(rng)) {
        for (const FisherPoint& point : fisher_two_outcome(protocol, grid))
            require(point.fisher <= quantum_limit + 1e-9,
                    name + ": FI " + std::to_string(point.fisher) + " exceeds QFI " +
                        std::to_string(quantum_limit) + " at kappa = " +
                        std::to_string(point.kappa));
    }

    // Mixed probe: the bound holds against the SLD QFI.
    const ModeLayout layout = make_layout(2, 2);
    const OneBodyGenerator g = alternating_delay_generator(layout, {0.2, 0.9});
    const MixedState rho(layout,
                         {{0.6, rnd::random_shift_eigenstate(rng, layout, 2, 0, 4)},
                          {0.4, rnd::random_shift_eigenstate(rng, layout, 2, 0, 4)}});
    const oracle::DenseSectorBasis basis(layout, 2);
    const double quantum = oracle::mixed_qfi_sld(oracle::density_matrix(basis, rho),
                                                 oracle::embed_generator(basis, g));
    const EstimationProtocol protocol(rho, g, bs_unitary(layout, 0, 0, 0));
    for (const FisherPoint& point : fisher_two_outcome(protocol, grid))
        require(point.fisher <= quantum + 1e-9,
                "mixed sweep: FI exceeds the SLD QFI at kappa = " +
                    std::to_string(point.kappa));
}

// ---------------------------------------------------------------------------
// 7. Mixed states: extremal symmetry, the weighted commutator variance, and
//    the SLD-QFI equality for the effective generator.
void criterion_mixed_states() {
    rnd::Source rng(202608107ULL);

    // Extremal symmetry: |tr(rho P)| = 1 forces every component onto the
    // same eigenvalue.
    for (const auto& [n, residue] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}}) {
        const ModeLayout layout = make_layout(n, 2);
        std::vector<MixedState::Component> components;
        for (int c = 0; c < 3; ++c)
            components.push_back(
                {c == 0 ? 0.5 : 0.25,
                 rnd::random_shift_eigenstate(rng, layout, 2, residue, 4)});
        const MixedState rho(layout, components);
        const Complex trace = mixed_symmetry_measure(rho, cyclic_shift_permutation(n));
        require(std::abs(std::abs(trace) - 1.0) < 1e-10, "|tr(rho P)| should be 1");
        const Complex eigenvalue = unit_root(n, residue);
        for (const auto& [weight, component] : rho.components()) {
            require(std::abs(permutation_expectation(component, cyclic_shift_permutation(n)) -
                             eigenvalue) < 1e-8,
                    "component expectation strays from the common eigenvalue");
            const FockState shifted =
                apply_spatial_permutation(component, cyclic_shift_permutation(n));
            require(testing::state_distance(shifted, superpose({{eigenvalue, component}})) < 1e-8,
                    "component of an extremal mixture is not an eigenstate");
        }
    }

    // fisher_mixed is the weighted pure-component commutator variance.
    const ModeLayout layout = make_layout(2, 2);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
    h(layout.flatten(1, 0), layout.flatten(1, 0)) = 0.4;
    h(layout.flatten(1, 1), layout.flatten(1, 1)) = 1.3;
    const OneBodyGenerator delay(layout, h);
    const ModeUnitary hadamard = bs_unitary(layout, 0, 0, 0);

    for (const auto& [label, residue] : std::vector<std::pair<std::string, int>>{
             {"tr(rho P) = +1", 0}, {"tr(rho P) = -1", 1}}) {
        std::vector<MixedState::Component> components;
        components.push_back({0.7, rnd::random_shift_eigenstate(rng, layout, 2, residue, 4)});
        components.push_back({0.3, rnd::random_shift_eigenstate(rng, layout, 2, residue, 4)});
        const MixedState rho(layout, components);
        const EstimationProtocol protocol(rho, delay, hadamard);
        const double fisher = fisher_mixed(protocol);

        CompensatedSum weighted;
        for (const auto& [weight, component] : rho.components())
            weighted.add(weight *
                         fisher_limit_commutator(EstimationProtocol(component, delay, hadamard)));
        require_close(fisher, weighted.value(), 1e-9 * std::max(1.0, fisher),
                      label + ": fisher_mixed vs weighted component variances");

        const ProbeSymmetry symmetry =
            residue == 0 ? ProbeSymmetry::PlusEigenstate : ProbeSymmetry::MinusEigenstate;
        const OneBodyGenerator effective(layout, effective_generator_matrix(delay, symmetry));
        const oracle::DenseSectorBasis basis(layout, 2);
        const double sld = oracle::mixed_qfi_sld(oracle::density_matrix(basis, rho),
                                                 oracle::embed_generator(basis, effective));
        require_close(fisher, sld, 1e-6, label + ": fisher_mixed vs SLD QFI of the effective "
                                                 "generator");
    }
}

// ---------------------------------------------------------------------------
// 8. Pre-DFT symmetrization delivers admissible probes.
void criterion_predft_symmetrization() {
    const FockState two = symmetrize_by_predft(testing::photon_pair(0, 0));
    const FockState two_shifted = apply_spatial_permutation(two, cyclic_shift_permutation(2));
    require(testing::state_distance(two_shifted, superpose({{Complex{-1.0, 0.0}, two}})) < 1e-10,
            "n = 2 pre-DFT output is not a -1 eigenstate");

    const FockState three =
        symmetrize_by_predft(testing::one_photon_per_mode(make_layout(3, 1)));
    const FockState three_shifted = apply_spatial_permutation(three, cyclic_shift_permutation(3));
    require(testing::state_distance(three_shifted, three) < 1e-10,
            "n = 3 pre-DFT output is not a +1 eigenstate");

    // Both outputs pass the protocol preconditions.
    const EstimationProtocol minus(two, mode_phase_generator(make_layout(2, 1), {0.0, 1.0}),
                                   bs_unitary(make_layout(2, 1), 0, 0, 0));
    require(minus.probe_symmetry() == ProbeSymmetry::MinusEigenstate,
            "n = 2 probe misclassified");
    (void)fisher_symmetry_adapted(minus);

    const EstimationProtocol plus(three,
                                  mode_phase_generator(make_layout(3, 1), {0.1, 0.6, 1.4}),
                                  dft_unitary(make_layout(3, 1)));
    require(plus.probe_symmetry() == ProbeSymmetry::PlusEigenstate, "n = 3 probe misclassified");
    (void)fisher_symmetry_adapted(plus);
}

// ---------------------------------------------------------------------------
// 9. The oracle-equivalence battery, in-process and through the CLI.
std::string g_cli_path;

void criterion_oracle_equivalence() {
    const verify::Report report = verify::run_all();
    for (const auto& check : report.checks)
        require(check.passed, check.name + ": " + check.detail);
    require(report.checks.size() >= 25, "verification battery looks truncated");

    if (!g_cli_path.empty()) {
        const std::string command =
            g_cli_path + " verify --out acceptance_verify_out > /dev/null";
        require(std::system(command.c_str()) == 0, "`verify` subcommand exited nonzero");
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_cli_path = argv[1];

    struct Criterion {
        int number;
        std::string title;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "HOM dip and antisymmetric reversal (tol 1e-10)", criterion_hom_dip},
        {2, "detection/symmetry duality on 100 random states per configuration (tol 1e-10)",
         criterion_duality},
        {3, "DFT diagonalization, homomorphism, block-DFT reduction (tol 1e-12/1e-10)",
         criterion_dft_and_homomorphism},
        {4, "residue projector algebra on dense sectors (tol 1e-9)",
         criterion_projector_algebra},
        {5, "metrology consistency triangle and optimality certificates (tol 1e-9/1e-3)",
         criterion_consistency_triangle},
        {6, "FI <= QFI at every sweep grid point (slack 1e-9)", criterion_fi_bounded_by_qfi},
        {7, "mixed states: extremal symmetry, weighted variances, SLD-QFI equality "
            "(tol 1e-8/1e-9/1e-6)",
         criterion_mixed_states},
        {8, "pre-DFT symmetrization yields admissible +-1 probes (tol 1e-10)",
         criterion_predft_symmetrization},
        {9, "oracle equivalence battery and `verify` subcommand", criterion_oracle_equivalence},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        try {
            criterion.run();
            std::printf("[PASS] criterion %d: %s\n", criterion.number, criterion.title.c_str());
        } catch (const Failure& failure) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s -- %s\n", criterion.number,
                        criterion.title.c_str(), failure.detail.c_str());
        } catch (const std::exception& error) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s -- exception: %s\n", criterion.number,
                        criterion.title.c_str(), error.what());
        }
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
