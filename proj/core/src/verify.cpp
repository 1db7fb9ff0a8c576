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

#include "homsym/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "homsym/detection.hpp"
#include "homsym/fock.hpp"
#include "homsym/linops.hpp"
#include "homsym/metrology.hpp"
#include "homsym/oracle.hpp"
#include "homsym/random.hpp"
#include "homsym/symmetry.hpp"

namespace homsym::verify {

int Report::failures() const {
    int count = 0;
    for (const auto& check : checks)
        if (!check.passed)
            ++count;
    return count;
}

namespace {

struct CheckFailure {
    std::string detail;
};

void require(bool condition, const std::string& detail) {
    if (!condition)
        throw CheckFailure{detail};
}

void require_close(double actual, double expected, double tolerance, const std::string& what) {
    if (std::abs(actual - expected) > tolerance) {
        std::ostringstream oss;
        oss << what << ": " << actual << " vs " << expected << " (tol " << tolerance << ")";
        throw CheckFailure{oss.str()};
    }
}

class Battery {
public:
    explicit Battery(std::uint64_t seed) : rng_(seed) {}

    rnd::Source& rng() { return rng_; }
    Report take_report() { return std::move(report_); }

    void run(const std::string& name, const std::function<void()>& body) {
        CheckResult result{name, true, ""};
        try {
            body();
        } catch (const CheckFailure& failure) {
            result.passed = false;
            result.detail = failure.detail;
        } catch (const std::exception& error) {
            result.passed = false;
            result.detail = std::string("exception: ") + error.what();
        }
        report_.checks.push_back(std::move(result));
    }

private:
    rnd::Source rng_;
    Report report_;
};

FockState hom_biphoton(int internal_a = 0, int internal_b = 0, int d = 1) {
    const ModeLayout layout = make_layout(2, d);
    std::vector<int> counts(static_cast<std::size_t>(layout.flat_size()), 0);
    counts[static_cast<std::size_t>(layout.flatten(0, internal_a))] += 1;
    counts[static_cast<std::size_t>(layout.flatten(1, internal_b))] += 1;
    return basis_state(layout, counts);
}

FockState antisymmetric_biphoton() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return superpose({{Complex{inv_sqrt2, 0.0}, hom_biphoton(0, 1, 2)},
                      {Complex{-inv_sqrt2, 0.0}, hom_biphoton(1, 0, 2)}});
}

FockState one_photon_per_mode(const ModeLayout& layout) {
    std::vector<int> counts(static_cast<std::size_t>(layout.flat_size()), 0);
    for (int s = 0; s < layout.spatial; ++s)
        counts[static_cast<std::size_t>(layout.flatten(s, 0))] = 1;
    return basis_state(layout, counts);
}

void register_fock_checks(Battery& battery) {
    battery.run("fock/number-expectation-dense", [&] {
        const ModeLayout layout = make_layout(2, 1);
        const FockState two = basis_state(layout, {2, 0});
        const oracle::DenseSectorBasis basis(layout, 2);
        const Eigen::MatrixXcd number =
            oracle::embed_generator(basis, number_generator(layout, 0));
        const Eigen::VectorXcd vec = oracle::embed_state(basis, two);
        require_close((vec.adjoint() * number * vec).real()(0, 0), 2.0, 1e-12,
                      "<n_00> on a doubly occupied mode");
    });

    battery.run("fock/inner-product-dense-dot", [&] {
        const ModeLayout layout = make_layout(3, 1);
        const FockState a = rnd::random_state(battery.rng(), layout, 2, 3);
        const FockState b = rnd::random_state(battery.rng(), layout, 2, 3);
        const oracle::DenseSectorBasis basis(layout, 2);
        const Complex dense =
            (oracle::embed_state(basis, a).adjoint() * oracle::embed_state(basis, b))(0, 0);
        require(std::abs(inner_product(a, b) - dense) < 1e-12,
                "sparse inner product disagrees with the dense dot product");
    });
}

void register_linops_checks(Battery& battery) {
    battery.run("linops/apply-matches-dense-embedding", [&] {
        const ModeLayout layout = make_layout(3, 1);
        for (int round = 0; round < 20; ++round) {
            const ModeUnitary u =
                ModeUnitary::from_full(layout, rnd::random_unitary(battery.rng(), 3));
            const FockState psi = rnd::random_state(battery.rng(), layout, 2, 3);
            const oracle::DenseSectorBasis basis(layout, 2);
            const Eigen::VectorXcd expected =
                oracle::embed_unitary(basis, u) * oracle::embed_state(basis, psi);
            const Eigen::VectorXcd actual = oracle::embed_state(basis, apply_to_state(u, psi));
            require((expected - actual).cwiseAbs().maxCoeff() < 1e-10,
                    "multinomial application disagrees with the dense sector matrix");
        }
    });

    battery.run("linops/homomorphism-state-level", [&] {
        const ModeLayout layout = make_layout(3, 1);
        for (int round = 0; round < 20; ++round) {
            const ModeUnitary m =
                ModeUnitary::from_full(layout, rnd::random_unitary(battery.rng(), 3));
            const ModeUnitary n =
                ModeUnitary::from_full(layout, rnd::random_unitary(battery.rng(), 3));
            const FockState psi = rnd::random_state(battery.rng(), layout, 2, 3);
            const FockState composed = apply_to_state(compose(m, n), psi);
            const FockState chained = apply_to_state(m, apply_to_state(n, psi));
            const double deviation =
                superpose({{Complex{1.0, 0.0}, composed}, {Complex{-1.0, 0.0}, chained}}).norm();
            require(deviation < 1e-10, "apply(compose(M,N)) deviates from apply(M) o apply(N)");
        }
    });

    battery.run("linops/dft-diagonalizes-cyclic-shift", [&] {
        for (int n = 2; n <= 6; ++n) {
            const ModeLayout layout = make_layout(n, 1);
            const Eigen::MatrixXcd u = dft_unitary(layout).matrix();
            const Eigen::MatrixXcd d = diagonal_phase_unitary(layout).matrix();
            const Eigen::MatrixXcd p = cyclic_permutation_unitary(layout).matrix();
            require((u * d * u.adjoint() - p).cwiseAbs().maxCoeff() < 1e-12,
                    "U D U^dag misses P at n = " + std::to_string(n));
        }
    });

    battery.run("linops/monomial-vs-general-path", [&] {
        const ModeLayout layout = make_layout(4, 2);
        const ModeUnitary shift = cyclic_permutation_unitary(layout);
        const ModeUnitary general = ModeUnitary::from_full(layout, shift.matrix());
        require(!general.monomial().has_value(), "rewrapped matrix kept its monomial tag");
        for (int round = 0; round < 10; ++round) {
            const FockState psi = rnd::random_state(battery.rng(), layout, 3, 4);
            const FockState fast = apply_to_state(shift, psi);
            const FockState slow = apply_to_state(general, psi);
            const double deviation =
                superpose({{Complex{1.0, 0.0}, fast}, {Complex{-1.0, 0.0}, slow}}).norm();
            require(deviation < 1e-12, "relabeling path deviates from the multinomial path");
        }
    });
}

void register_symmetry_checks(Battery& battery) {
    battery.run("symmetry/residue-weights-vs-dense-projector", [&] {
        for (int d = 1; d <= 2; ++d) {
            const ModeLayout layout = make_layout(3, d);
            const oracle::DenseSectorBasis basis(layout, 2);
            for (int round = 0; round < 10; ++round) {
                const FockState psi = rnd::random_state(battery.rng(), layout, 2, 4);
                const Eigen::VectorXcd vec = oracle::embed_state(basis, psi);
                const auto weights = residue_weights(psi);
                for (int j = 0; j < 3; ++j) {
                    const Eigen::MatrixXcd projector = oracle::dense_projector_residue(basis, j);
                    require_close(weights[static_cast<std::size_t>(j)],
                                  (vec.adjoint() * projector * vec).real()(0, 0), 1e-10,
                                  "residue weight vs dense projector expectation");
                }
            }
        }
    });

    battery.run("symmetry/decompose-exchange-verification", [&] {
        const ModeLayout layout = make_layout(2, 2);
        for (int round = 0; round < 20; ++round) {
            const FockState psi = rnd::random_state(battery.rng(), layout, 2, 3);
            const auto [sym, anti] = decompose_exchange(psi);
            const double expectation = exchange_expectation(psi).real();
            require_close(sym.norm_sq(), 0.5 * (1.0 + expectation), 1e-12,
                          "symmetric part norm^2 vs (1 + <S>)/2");
            require_close(anti.norm_sq(), 0.5 * (1.0 - expectation), 1e-12,
                          "antisymmetric part norm^2 vs (1 - <S>)/2");
            const FockState swapped_sym = apply_spatial_permutation(sym, exchange_permutation());
            const double eigen_deviation =
                superpose({{Complex{1.0, 0.0}, swapped_sym}, {Complex{-1.0, 0.0}, sym}}).norm();
            require(eigen_deviation < 1e-12, "symmetric part is not an S eigenstate");
        }
    });

    battery.run("symmetry/effective-symmetry-equal-occupation", [&] {
        const ModeLayout layout = make_layout(2, 2);
        for (int round = 0; round < 20; ++round) {
            // Equal photon number per port: one photon in each, random internals.
            FockState::AmplitudeMap map;
            for (int t = 0; t < 3; ++t) {
                std::vector<int> counts(4, 0);
                counts[static_cast<std::size_t>(layout.flatten(0, battery.rng().uniform_int(2)))] += 1;
                counts[static_cast<std::size_t>(layout.flatten(1, battery.rng().uniform_int(2)))] += 1;
                map[OccupationVector(counts)] = battery.rng().complex_normal();
            }
            const FockState psi = FockState(layout, std::move(map)).normalized();
            const double theta = 3.0 * (battery.rng().uniform() - 0.5);
            const double phi = 3.0 * (battery.rng().uniform() - 0.5);
            const Complex frak =
                inner_product(psi, apply_to_state(effective_symmetry(layout, theta, phi), psi));
            const Complex plain = exchange_expectation(psi);
            require(std::abs(frak - plain) < 1e-10,
                    "<S_frak> deviates from <S> on an equal-occupation state");
        }
    });

    battery.run("symmetry/extremal-mixture-components", [&] {
        const ModeLayout layout = make_layout(3, 1);
        std::vector<MixedState::Component> components;
        for (int c = 0; c < 3; ++c)
            components.push_back(
                {c == 0 ? 0.5 : 0.25,
                 rnd::random_shift_eigenstate(battery.rng(), layout, 3, 1, 4)});
        const MixedState rho(layout, components);
        const Complex trace = mixed_symmetry_measure(rho, cyclic_shift_permutation(3));
        require(std::abs(std::abs(trace) - 1.0) < 1e-10, "|tr(rho P)| misses 1");
        for (const auto& [weight, component] : rho.components())
            require(std::abs(permutation_expectation(component, cyclic_shift_permutation(3)) -
                             unit_root(3, 1)) < 1e-10,
                    "a component of an extremal mixture is not an eigenstate");
    });

    battery.run("symmetry/block-dft-diagonalizes-permutations", [&] {
        const std::vector<int> fixed{2, 0, 1, 4, 3};  // cycles (0 2 1)(3 4)
        std::vector<std::vector<int>> cases{fixed};
        for (int round = 0; round < 5; ++round)
            cases.push_back(rnd::random_permutation(battery.rng(), 6));
        for (const auto& sigma : cases) {
            const ModeLayout layout = make_layout(static_cast<int>(sigma.size()), 1);
            const Eigen::MatrixXcd p = permutation_unitary(layout, sigma).matrix();
            const Eigen::MatrixXcd b = block_dft_unitary(layout, sigma).matrix();
            const Eigen::MatrixXcd diag = b.adjoint() * p * b;
            double off = 0.0;
            for (int r = 0; r < diag.rows(); ++r)
                for (int c = 0; c < diag.cols(); ++c)
                    if (r != c)
                        off = std::max(off, std::abs(diag(r, c)));
            require(off < 1e-10, "block DFT fails to diagonalize the permutation");
        }
    });

    battery.run("symmetry/projector-algebra-dense", [&] {
        const ModeLayout layout = make_layout(3, 1);
        const oracle::DenseSectorBasis basis(layout, 2);
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(basis.dimension(), basis.dimension());
        for (int j = 0; j < 3; ++j) {
            const Eigen::MatrixXcd pj = oracle::dense_projector_residue(basis, j);
            require((pj * pj - pj).cwiseAbs().maxCoeff() < 1e-9, "Pi_j is not idempotent");
            for (int k = 0; k < j; ++k) {
                const Eigen::MatrixXcd pk = oracle::dense_projector_residue(basis, k);
                require((pj * pk).cwiseAbs().maxCoeff() < 1e-9, "Pi_j Pi_k is not zero");
            }
            sum += pj;
        }
        require((sum - Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension()))
                        .cwiseAbs()
                        .maxCoeff() < 1e-9,
                "residue projectors do not resolve the identity");
    });
}

void register_detection_checks(Battery& battery) {
    battery.run("detection/output-distribution-vs-dense", [&] {
        const ModeLayout layout = make_layout(3, 1);
        const oracle::DenseSectorBasis basis(layout, 2);
        const ModeUnitary dft = dft_unitary(layout);
        const Eigen::MatrixXcd dense_dft = oracle::embed_unitary(basis, dft);
        for (int round = 0; round < 10; ++round) {
            const FockState psi = rnd::random_state(battery.rng(), layout, 2, 4);
            const Eigen::VectorXcd out_vec = dense_dft * oracle::embed_state(basis, psi);
            const OutcomeDistribution dist = output_distribution(psi, dft);
            for (int i = 0; i < basis.dimension(); ++i) {
                const auto spatial = basis.element(i).spatial_totals(layout);
                double expected = std::norm(out_vec(i));
                // d = 1: spatial counts and occupation vectors coincide.
                require_close(dist.probability(spatial), expected, 1e-10,
                              "outcome probability vs dense enumeration");
            }
        }
    });

    battery.run("detection/parity-four-photons-vs-dense", [&] {
        const ModeLayout layout = make_layout(2, 1);
        const FockState two_per_arm = basis_state(layout, {2, 2});
        const oracle::DenseSectorBasis basis(layout, 4);
        const Eigen::VectorXcd out = oracle::embed_unitary(basis, bs_unitary(layout, 0, 0, 0)) *
                                     oracle::embed_state(basis, two_per_arm);
        double even = 0.0;
        for (int i = 0; i < basis.dimension(); ++i)
            if (basis.element(i)[1] % 2 == 0)
                even += std::norm(out(i));
        require_close(parity_even_probability(two_per_arm), even, 1e-10,
                      "parity-even probability vs dense enumeration");
    });

    battery.run("detection/duality-random-states", [&] {
        for (int n = 2; n <= 4; ++n)
            for (int d = 1; d <= 2; ++d) {
                const ModeLayout layout = make_layout(n, d);
                for (int round = 0; round < 5; ++round) {
                    const FockState psi = rnd::random_state(battery.rng(), layout, 3, 4);
                    CompensatedSum total;
                    for (int j = 0; j < n; ++j)
                        total.add(modular_sum_probability(psi, j));  // throws on mismatch
                    require_close(total.value(), 1.0, 1e-10, "modular-sum probabilities sum");
                }
            }
    });

    battery.run("detection/mixed-statistics-component-sum", [&] {
        const ModeLayout layout = make_layout(3, 1);
        std::vector<MixedState::Component> components;
        const std::vector<double> weights{0.5, 0.3, 0.2};
        for (double w : weights)
            components.push_back({w, rnd::random_state(battery.rng(), layout, 2, 3)});
        const MixedState rho(layout, components);
        const ModeUnitary dft = dft_unitary(layout);
        for (int j = 0; j < 3; ++j) {
            CompensatedSum expected;
            for (const auto& [w, component] : rho.components())
                expected.add(w * modular_sum_probability(component, j));
            require_close(mixed_output_statistics(rho, dft, j), expected.value(), 1e-10,
                          "mixed residue probability vs weighted component sum");
        }
    });
}

void register_metrology_checks(Battery& battery) {
    battery.run("metrology/evolve-vs-dense-expm", [&] {
        const ModeLayout layout = make_layout(2, 2);
        const oracle::DenseSectorBasis basis(layout, 2);
        for (int round = 0; round < 10; ++round) {
            const OneBodyGenerator g(layout, rnd::random_hermitian(battery.rng(), 4));
            const FockState psi = rnd::random_state(battery.rng(), layout, 2, 3);
            const Eigen::VectorXcd expected =
                oracle::dense_expm(oracle::embed_generator(basis, g), 0.1) *
                oracle::embed_state(basis, psi);
            const Eigen::VectorXcd actual = oracle::embed_state(basis, evolve(psi, g, 0.1));
            require((expected - actual).cwiseAbs().maxCoeff() < 1e-9,
                    "mode-space evolution disagrees with the dense sector exponential");
        }
    });

    battery.run("metrology/qfi-vs-dense-variance", [&] {
        const ModeLayout layout = make_layout(3, 1);
        const oracle::DenseSectorBasis basis(layout, 2);
        for (int round = 0; round < 10; ++round) {
            const OneBodyGenerator g(layout, rnd::random_hermitian(battery.rng(), 3));
            const FockState psi = rnd::random_state(battery.rng(), layout, 2, 4);
            const Eigen::MatrixXcd h = oracle::embed_generator(basis, g);
            const Eigen::VectorXcd vec = oracle::embed_state(basis, psi);
            const double mean = (vec.adjoint() * h * vec).real()(0, 0);
            const double second = (vec.adjoint() * h * h * vec).real()(0, 0);
            require_close(qfi(psi, g), 4.0 * (second - mean * mean), 1e-9,
                          "qfi vs dense 4(<H^2> - <H>^2)");
        }
    });

    battery.run("metrology/conjugation-covariance", [&] {
        const ModeLayout layout = make_layout(3, 1);
        const oracle::DenseSectorBasis basis(layout, 2);
        const Eigen::MatrixXcd shift = oracle::dense_cyclic_shift(basis);
        for (int round = 0; round < 5; ++round) {
            const OneBodyGenerator g(layout, rnd::random_hermitian(battery.rng(), 3));
            Eigen::MatrixXcd conjugated = oracle::embed_generator(basis, g);
            for (int l = 1; l < 3; ++l) {
                conjugated = shift * conjugated * shift.adjoint();
                const Eigen::MatrixXcd direct =
                    oracle::embed_generator(basis, conjugate_by_cyclic_shift(g, l));
                require((conjugated - direct).cwiseAbs().maxCoeff() < 1e-10,
                        "one-body conjugation covariance fails at l = " + std::to_string(l));
            }
        }
    });

    battery.run("metrology/consistency-triangle-random-protocol", [&] {
        const ModeLayout layout = make_layout(3, 1);
        for (int round = 0; round < 5; ++round) {
            const FockState probe = rnd::random_shift_eigenstate(battery.rng(), layout, 2, 0, 4);
            const OneBodyGenerator g(layout, rnd::random_hermitian(battery.rng(), 3));
            const EstimationProtocol protocol(probe, g, dft_unitary(layout));
            const double adapted = fisher_symmetry_adapted(protocol);
            const double commutator = fisher_limit_commutator(protocol);
            require_close(adapted, commutator, 1e-9 * std::max(1.0, adapted),
                          "adapted variance vs commutator variance");
            const double extrapolated = fisher_kappa_zero(protocol);
            require(std::abs(extrapolated - adapted) <= 1e-3 * std::max(1.0, adapted),
                    "finite-difference limit deviates from the closed form (" +
                        std::to_string(extrapolated) + " vs " + std::to_string(adapted) + ")");
        }
    });

    battery.run("metrology/hom-delay-fisher", [&] {
        const ModeLayout layout = make_layout(2, 2);
        const FockState probe = antisymmetric_biphoton();
        // Delay acting on port 1 only, internal spectrum {0, 1}.
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
        h(layout.flatten(1, 0), layout.flatten(1, 0)) = 0.0;
        h(layout.flatten(1, 1), layout.flatten(1, 1)) = 1.0;
        const OneBodyGenerator g(layout, h);
        const EstimationProtocol protocol(probe, g, bs_unitary(layout, 0, 0, 0));

        // Var(H - S H S) on the probe, assembled with the swap conjugation.
        const OneBodyGenerator swapped = conjugate_by_cyclic_shift(g, 1);
        const OneBodyGenerator difference(layout, g.matrix() - swapped.matrix());
        const double variance = one_body_variance(difference, probe);
        require_close(fisher_symmetry_adapted(protocol), variance, 1e-9,
                      "n = 2 adapted form vs Var(H - SHS)");
        require_close(fisher_limit_commutator(protocol), variance, 1e-9,
                      "commutator form vs Var(H - SHS)");
        const double extrapolated = fisher_kappa_zero(protocol);
        require(std::abs(extrapolated - variance) <= 1e-3 * std::max(1.0, variance),
                "finite-difference HOM Fisher information misses Var(H - SHS)");
    });

    battery.run("metrology/collective-delay-blind-spot", [&] {
        // Internal-mode GHZ entanglement gives the collective delay nonzero
        // variance, yet the protocol is blind to it.
        const ModeLayout layout = make_layout(4, 2);
        const double w = 1.0 / std::sqrt(2.0);
        const FockState entangled =
            superpose({{Complex{w, 0.0}, basis_state(layout, {1, 0, 1, 0, 1, 0, 1, 0})},
                       {Complex{w, 0.0}, basis_state(layout, {0, 1, 0, 1, 0, 1, 0, 1})}});
        const FockState probe = symmetrize_by_predft(entangled);
        const OneBodyGenerator omega = collective_delay_generator(layout, {0.3, 1.1});
        const EstimationProtocol protocol(probe, omega, dft_unitary(layout));
        require(qfi(probe, omega) > 0.1, "blind-spot case degenerated to zero QFI");
        require(std::abs(fisher_limit_commutator(protocol)) < 1e-9,
                "symmetric generator should carry zero Fisher information");
        require(std::abs(fisher_two_outcome_at(protocol, 0.05).fisher) < 1e-9,
                "two-outcome sweep sees information in a symmetric generator");
    });

    battery.run("metrology/alternating-delay-optimal", [&] {
        const ModeLayout layout = make_layout(4, 2);
        const FockState probe = symmetrize_by_predft(basis_state(layout, {1, 0, 0, 1, 1, 0, 0, 1}));
        const OneBodyGenerator omega_prime = alternating_delay_generator(layout, {0.0, 1.0});
        const EstimationProtocol protocol(probe, omega_prime, dft_unitary(layout));
        require(protocol.probe_symmetry() == ProbeSymmetry::MinusEigenstate,
                "one photon per mode through the DFT at n = 4 should be a -1 eigenstate");
        const double quantum = qfi(probe, omega_prime);
        require(quantum > 0.1, "optimality case degenerated to zero QFI");
        const double adapted = fisher_symmetry_adapted(protocol);
        require_close(adapted, quantum, 1e-9, "alternating delay misses the quantum limit");
        require_close(adapted, fisher_limit_commutator(protocol), 1e-9,
                      "adapted vs commutator variance for the alternating delay");
    });

    battery.run("metrology/mixed-fisher-sld-equality", [&] {
        const ModeLayout layout = make_layout(2, 2);
        const OneBodyGenerator g = alternating_delay_generator(layout, {0.3, 1.1});
        std::vector<MixedState::Component> components;
        components.push_back({0.6, rnd::random_shift_eigenstate(battery.rng(), layout, 2, 0, 4)});
        components.push_back({0.4, rnd::random_shift_eigenstate(battery.rng(), layout, 2, 0, 4)});
        const MixedState rho(layout, components);
        const EstimationProtocol protocol(rho, g, bs_unitary(layout, 0, 0, 0));
        const double fisher = fisher_mixed(protocol);

        const oracle::DenseSectorBasis basis(layout, 2);
        const OneBodyGenerator effective(
            layout, effective_generator_matrix(g, ProbeSymmetry::PlusEigenstate));
        const double sld = oracle::mixed_qfi_sld(oracle::density_matrix(basis, rho),
                                                 oracle::embed_generator(basis, effective));
        require_close(fisher, sld, 1e-6, "mixed Fisher information vs SLD QFI");
    });

    battery.run("metrology/predft-eigenvalue-convention", [&] {
        for (int n = 2; n <= 4; ++n) {
            const ModeLayout layout = make_layout(n, 1);
            const FockState out = symmetrize_by_predft(one_photon_per_mode(layout));
            const int residue = (n * (n - 1) / 2) % n;
            const auto expectations = cyclic_expectations(out);
            require(std::abs(expectations[1] - unit_root(n, residue)) < 1e-10,
                    "<P> after the pre-DFT misses omega^r at n = " + std::to_string(n));
        }
    });

    battery.run("metrology/probability-expansion-quadratic", [&] {
        const ModeLayout layout = make_layout(2, 2);
        // The antisymmetric biphoton is Pi_0-null, so the hit probability
        // opens as kappa^2 A with A = Var(i[H, Pi]).
        const FockState probe = antisymmetric_biphoton();
        const OneBodyGenerator g = alternating_delay_generator(layout, {0.2, 1.3});
        const EstimationProtocol protocol(probe, g, bs_unitary(layout, 0, 0, 0));
        const double a = fisher_limit_commutator(protocol) / 4.0;
        for (int i = 1; i <= 5; ++i) {
            const double kappa = 2e-3 * i;
            const auto [hit, miss] = protocol.outcome_probabilities(kappa);
            (void)miss;
            require(std::abs(hit - a * kappa * kappa) < 1e-6,
                    "q(kappa) deviates from A kappa^2 beyond o(kappa^2)");
        }
    });
}

void register_oracle_checks(Battery& battery) {
    battery.run("oracle/embedding-homomorphism", [&] {
        const ModeLayout layout = make_layout(3, 1);
        const oracle::DenseSectorBasis basis(layout, 2);
        const ModeUnitary m = ModeUnitary::from_full(layout, rnd::random_unitary(battery.rng(), 3));
        const ModeUnitary n = ModeUnitary::from_full(layout, rnd::random_unitary(battery.rng(), 3));
        const Eigen::MatrixXcd lhs = oracle::embed_unitary(basis, compose(m, n));
        const Eigen::MatrixXcd rhs =
            oracle::embed_unitary(basis, m) * oracle::embed_unitary(basis, n);
        require((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9, "embed(MN) deviates from embed(M) embed(N)");
    });

    battery.run("oracle/embedded-unitarity", [&] {
        const ModeLayout layout = make_layout(3, 1);
        const oracle::DenseSectorBasis basis(layout, 2);
        const ModeUnitary u = ModeUnitary::from_full(layout, rnd::random_unitary(battery.rng(), 3));
        const Eigen::MatrixXcd e = oracle::embed_unitary(basis, u);
        require((e.adjoint() * e -
                 Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension()))
                        .cwiseAbs()
                        .maxCoeff() < 1e-9,
                "embedded unitary lost orthonormal columns");
    });

    battery.run("oracle/expm-group-law", [&] {
        const Eigen::MatrixXcd h = rnd::random_hermitian(battery.rng(), 5);
        const Eigen::MatrixXcd lhs = oracle::dense_expm(h, 0.3) * oracle::dense_expm(h, 0.5);
        const Eigen::MatrixXcd rhs = oracle::dense_expm(h, 0.8);
        require((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9, "expm group law fails");
    });

    battery.run("oracle/sld-pure-and-mixed-limits", [&] {
        const ModeLayout layout = make_layout(2, 2);
        const oracle::DenseSectorBasis basis(layout, 1);
        const FockState psi = rnd::random_state(battery.rng(), layout, 1, 3);
        const OneBodyGenerator g(layout, rnd::random_hermitian(battery.rng(), 4));
        const Eigen::MatrixXcd h = oracle::embed_generator(basis, g);
        const Eigen::MatrixXcd pure = oracle::density_matrix(basis, MixedState(psi));
        require_close(oracle::mixed_qfi_sld(pure, h), qfi(psi, g), 1e-9,
                      "SLD QFI misses 4 Var(H) on a pure state");
        const Eigen::MatrixXcd maximally_mixed =
            Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension()) /
            static_cast<double>(basis.dimension());
        require(std::abs(oracle::mixed_qfi_sld(maximally_mixed, h)) < 1e-9,
                "maximally mixed state should carry zero QFI");
    });
}

} // namespace

Report run_all(std::uint64_t seed) {
    Battery battery(seed);
    register_fock_checks(battery);
    register_linops_checks(battery);
    register_symmetry_checks(battery);
    register_detection_checks(battery);
    register_metrology_checks(battery);
    register_oracle_checks(battery);
    return battery.take_report();
}

} // namespace homsym::verify
