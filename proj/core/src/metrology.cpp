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

#include "homsym/metrology.hpp"

#include <algorithm>
#include <cmath>

#include "homsym/detection.hpp"
#include "homsym/oracle.hpp"
#include "homsym/symmetry.hpp"

namespace homsym {

namespace {

constexpr double fd_step_floor = 1e-4;

void require_normalized(const FockState& state, const char* where) {
    if (!state.is_normalized(tol::state_precondition))
        throw PreconditionError(std::string(where) + ": state is not normalized");
}

double difference_norm(const FockState& a, const FockState& b, Complex b_coeff) {
    return superpose({{Complex{1.0, 0.0}, a}, {-b_coeff, b}}).norm();
}

/// Var(i[H, Pi_j]) on a dense sector embedding of a pure component.
double dense_commutator_variance(const FockState& probe, const OneBodyGenerator& g, int residue) {
    const auto sector = photon_number_sector(probe);
    if (!sector)
        throw PreconditionError("fisher information: probe must live in a definite photon sector");
    const oracle::DenseSectorBasis basis(probe.layout(), *sector);
    const Eigen::MatrixXcd h = oracle::embed_generator(basis, g);
    const Eigen::MatrixXcd projector = oracle::dense_projector_residue(basis, residue);
    const Eigen::VectorXcd psi = oracle::embed_state(basis, probe);

    const double on_projector = (projector * psi - psi).norm();
    const double off_projector = (projector * psi).norm();
    if (on_projector > tol::state_precondition && off_projector > tol::state_precondition)
        throw PreconditionError(
            "fisher information: probe satisfies neither Pi psi = psi nor Pi psi = 0 "
            "(||Pi psi - psi|| = " + std::to_string(on_projector) +
            ", ||Pi psi|| = " + std::to_string(off_projector) + ")");

    const Eigen::MatrixXcd commutator = Complex{0.0, 1.0} * (h * projector - projector * h);
    const Eigen::VectorXcd k_psi = commutator * psi;
    const double mean = (psi.adjoint() * k_psi).real()(0, 0);
    const double second = k_psi.squaredNorm();
    return std::max(0.0, second - mean * mean);
}

} // namespace

OneBodyGenerator::OneBodyGenerator(ModeLayout layout, Eigen::MatrixXcd h)
    : layout_(layout), matrix_(std::move(h)) {
    if (matrix_.rows() != layout_.flat_size() || matrix_.cols() != layout_.flat_size())
        throw PreconditionError("OneBodyGenerator: expected a " +
                                std::to_string(layout_.flat_size()) + "x" +
                                std::to_string(layout_.flat_size()) + " matrix for layout " +
                                layout_.describe());
    const double deviation = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (deviation > tol::hermiticity)
        throw PreconditionError("OneBodyGenerator: matrix is not Hermitian, max |h - h^dag| = " +
                                std::to_string(deviation));
}

OneBodyGenerator mode_phase_generator(const ModeLayout& layout,
                                      const std::vector<double>& spatial_weights) {
    if (static_cast<int>(spatial_weights.size()) != layout.spatial)
        throw PreconditionError("mode_phase_generator: need one weight per spatial mode");
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(layout.flat_size(), layout.flat_size());
    for (int s = 0; s < layout.spatial; ++s)
        for (int i = 0; i < layout.internal; ++i)
            h(s * layout.internal + i, s * layout.internal + i) =
                spatial_weights[static_cast<std::size_t>(s)];
    return OneBodyGenerator(layout, std::move(h));
}

OneBodyGenerator collective_delay_generator(const ModeLayout& layout,
                                            const std::vector<double>& internal_weights) {
    if (static_cast<int>(internal_weights.size()) != layout.internal)
        throw PreconditionError("collective_delay_generator: need one weight per internal mode");
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(layout.flat_size(), layout.flat_size());
    for (int s = 0; s < layout.spatial; ++s)
        for (int i = 0; i < layout.internal; ++i)
            h(s * layout.internal + i, s * layout.internal + i) =
                internal_weights[static_cast<std::size_t>(i)];
    return OneBodyGenerator(layout, std::move(h));
}

OneBodyGenerator alternating_delay_generator(const ModeLayout& layout,
                                             const std::vector<double>& internal_weights) {
    if (static_cast<int>(internal_weights.size()) != layout.internal)
        throw PreconditionError("alternating_delay_generator: need one weight per internal mode");
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(layout.flat_size(), layout.flat_size());
    for (int s = 0; s < layout.spatial; ++s) {
        const double sign = (s % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < layout.internal; ++i)
            h(s * layout.internal + i, s * layout.internal + i) =
                sign * internal_weights[static_cast<std::size_t>(i)];
    }
    return OneBodyGenerator(layout, std::move(h));
}

OneBodyGenerator number_generator(const ModeLayout& layout, int spatial_mode) {
    if (spatial_mode < 0 || spatial_mode >= layout.spatial)
        throw PreconditionError("number_generator: spatial mode out of range");
    std::vector<double> weights(static_cast<std::size_t>(layout.spatial), 0.0);
    weights[static_cast<std::size_t>(spatial_mode)] = 1.0;
    return mode_phase_generator(layout, weights);
}

OneBodyGenerator conjugate_by_cyclic_shift(const OneBodyGenerator& g, int shifts) {
    const ModeLayout& layout = g.layout();
    const int n = layout.spatial;
    const int d = layout.internal;
    const int l = ((shifts % n) + n) % n;
    Eigen::MatrixXcd conjugated(layout.flat_size(), layout.flat_size());
    // (P^l h P^-l)(p, q) = h(p + l, q + l) with port indices mod n.
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k)
                    conjugated(p * d + i, q * d + k) =
                        g.matrix()(((p + l) % n) * d + i, ((q + l) % n) * d + k);
    return OneBodyGenerator(layout, std::move(conjugated));
}

FockState apply_one_body(const OneBodyGenerator& g, const FockState& state) {
    require_same_layout(g.layout(), state.layout(), "apply_one_body");
    const int modes = state.layout().flat_size();
    std::vector<std::pair<std::pair<int, int>, Complex>> entries;
    for (int j = 0; j < modes; ++j)
        for (int k = 0; k < modes; ++k)
            if (g.matrix()(j, k) != Complex{0.0, 0.0})
                entries.push_back({{j, k}, g.matrix()(j, k)});

    FockState::AmplitudeMap out;
    for (const auto& [key, amp] : state.amplitudes()) {
        for (const auto& [jk, h] : entries) {
            const auto [j, k] = jk;
            if (key[k] == 0)
                continue;
            if (j == k) {
                out[key] += amp * h * static_cast<double>(key[k]);
                continue;
            }
            std::vector<int> counts = key.counts();
            counts[static_cast<std::size_t>(k)] -= 1;
            counts[static_cast<std::size_t>(j)] += 1;
            const double factor = std::sqrt(static_cast<double>(key[k]) * (key[j] + 1.0));
            out[OccupationVector(std::move(counts))] += amp * h * factor;
        }
    }
    return FockState(state.layout(), std::move(out));
}

double one_body_expectation(const OneBodyGenerator& g, const FockState& state) {
    require_normalized(state, "one_body_expectation");
    const Complex value = inner_product(state, apply_one_body(g, state));
    if (std::abs(value.imag()) > tol::identity_check * std::max(1.0, std::abs(value)))
        throw IdentityError("one_body_expectation: imaginary residue on a Hermitian generator");
    return value.real();
}

double one_body_variance(const OneBodyGenerator& g, const FockState& state) {
    require_normalized(state, "one_body_variance");
    const FockState h_psi = apply_one_body(g, state);
    const Complex mean = inner_product(state, h_psi);
    if (std::abs(mean.imag()) > tol::identity_check * std::max(1.0, std::abs(mean)))
        throw IdentityError("one_body_variance: imaginary residue on a Hermitian generator");
    const double second = h_psi.norm_sq();
    return std::max(0.0, second - mean.real() * mean.real());
}

ModeUnitary evolution_unitary(const OneBodyGenerator& g, double kappa) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g.matrix());
    const int dim = g.layout().flat_size();
    Eigen::VectorXcd phases(dim);
    for (int i = 0; i < dim; ++i) {
        const double angle = kappa * solver.eigenvalues()(i);
        phases(i) = Complex{std::cos(angle), std::sin(angle)};
    }
    const Eigen::MatrixXcd m =
        solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    return ModeUnitary::from_full(g.layout(), m);
}

FockState evolve(const FockState& state, const OneBodyGenerator& g, double kappa) {
    require_same_layout(g.layout(), state.layout(), "evolve");
    if (kappa == 0.0)
        return state;
    return apply_to_state(evolution_unitary(g, kappa), state);
}

MixedState evolve(const MixedState& state, const OneBodyGenerator& g, double kappa) {
    if (kappa == 0.0)
        return state;
    return apply_to_state(evolution_unitary(g, kappa), state);
}

double qfi(const FockState& state, const OneBodyGenerator& g) {
    return 4.0 * one_body_variance(g, state);
}

EstimationProtocol::EstimationProtocol(FockState probe, OneBodyGenerator generator,
                                       ModeUnitary interferometer, int residue)
    : pure_probe_(std::move(probe)), generator_(std::move(generator)),
      interferometer_(std::move(interferometer)), residue_(residue) {
    finalize();
}

EstimationProtocol::EstimationProtocol(MixedState probe, OneBodyGenerator generator,
                                       ModeUnitary interferometer, int residue)
    : mixed_probe_(std::move(probe)), generator_(std::move(generator)),
      interferometer_(std::move(interferometer)), residue_(residue) {
    finalize();
}

const ModeLayout& EstimationProtocol::layout() const { return generator_.layout(); }

const FockState& EstimationProtocol::pure_probe() const {
    if (!pure_probe_)
        throw PreconditionError("protocol has a mixed probe");
    return *pure_probe_;
}

const MixedState& EstimationProtocol::mixed_probe() const {
    if (!mixed_probe_)
        throw PreconditionError("protocol has a pure probe");
    return *mixed_probe_;
}

Complex EstimationProtocol::mixed_shift_trace() const {
    if (!mixed_probe_)
        throw PreconditionError("mixed_shift_trace: protocol has a pure probe");
    return mixed_shift_trace_;
}

double EstimationProtocol::mixed_projector_trace() const {
    if (!mixed_probe_)
        throw PreconditionError("mixed_projector_trace: protocol has a pure probe");
    return mixed_projector_trace_;
}

void EstimationProtocol::finalize() {
    const ModeLayout& layout = generator_.layout();
    require_same_layout(layout, interferometer_.layout(), "EstimationProtocol");
    const int n = layout.spatial;
    if (residue_ < 0 || residue_ >= n)
        throw PreconditionError("EstimationProtocol: residue outside [0, n)");

    const auto shift = cyclic_shift_permutation(n);
    if (pure_probe_) {
        require_same_layout(layout, pure_probe_->layout(), "EstimationProtocol");
        require_normalized(*pure_probe_, "EstimationProtocol");
        const FockState shifted = apply_spatial_permutation(*pure_probe_, shift);
        if (difference_norm(shifted, *pure_probe_, Complex{1.0, 0.0}) <= tol::state_precondition)
            probe_symmetry_ = ProbeSymmetry::PlusEigenstate;
        else if (difference_norm(shifted, *pure_probe_, Complex{-1.0, 0.0}) <=
                 tol::state_precondition)
            probe_symmetry_ = ProbeSymmetry::MinusEigenstate;
        else if (project_residue(*pure_probe_, residue_).norm() <= tol::state_precondition)
            probe_symmetry_ = ProbeSymmetry::ProjectorNull;
        else
            probe_symmetry_ = ProbeSymmetry::None;
    } else {
        require_same_layout(layout, mixed_probe_->layout(), "EstimationProtocol");
        mixed_shift_trace_ = mixed_symmetry_measure(*mixed_probe_, shift);
        CompensatedSum projector_trace;
        for (const auto& [weight, component] : mixed_probe_->components())
            projector_trace.add(weight *
                                residue_weights(component)[static_cast<std::size_t>(residue_)]);
        mixed_projector_trace_ = projector_trace.value();
        if (std::abs(mixed_shift_trace_ - Complex{1.0, 0.0}) <= tol::state_precondition)
            probe_symmetry_ = ProbeSymmetry::PlusEigenstate;
        else if (std::abs(mixed_shift_trace_ + Complex{1.0, 0.0}) <= tol::state_precondition)
            probe_symmetry_ = ProbeSymmetry::MinusEigenstate;
        else if (mixed_projector_trace_ <= tol::state_precondition)
            probe_symmetry_ = ProbeSymmetry::ProjectorNull;
        else
            probe_symmetry_ = ProbeSymmetry::None;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(generator_.matrix());
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
    composed_left_ = interferometer_.matrix() * evecs_;
}

std::pair<double, double> EstimationProtocol::pure_outcome_probabilities(const FockState& probe,
                                                                         double kappa) const {
    const int n = layout().spatial;
    Eigen::VectorXcd phases(evals_.size());
    for (int i = 0; i < evals_.size(); ++i) {
        const double angle = kappa * evals_(i);
        phases(i) = Complex{std::cos(angle), std::sin(angle)};
    }
    const Eigen::MatrixXcd m = composed_left_ * phases.asDiagonal() * evecs_.adjoint();
    const ModeUnitary u = ModeUnitary::from_full(layout(), m);
    const auto residues = residue_sum_distribution(probe, u);
    const int hit_index = (n - residue_) % n;
    const double hit = residues[static_cast<std::size_t>(hit_index)];
    CompensatedSum miss;
    for (int r = 0; r < n; ++r)
        if (r != hit_index)
            miss.add(residues[static_cast<std::size_t>(r)]);
    return {hit, miss.value()};
}

std::pair<double, double> EstimationProtocol::outcome_probabilities(double kappa) const {
    std::pair<double, double> result{0.0, 0.0};
    if (pure_probe_) {
        result = pure_outcome_probabilities(*pure_probe_, kappa);
    } else {
        CompensatedSum hit;
        CompensatedSum miss;
        for (const auto& [weight, component] : mixed_probe_->components()) {
            const auto [h, m] = pure_outcome_probabilities(component, kappa);
            hit.add(weight * h);
            miss.add(weight * m);
        }
        result = {hit.value(), miss.value()};
    }
    if (std::abs(result.first + result.second - 1.0) > tol::identity_check)
        throw IdentityError("outcome_probabilities: outcomes sum to " +
                            std::to_string(result.first + result.second));
    return result;
}

namespace {

double fisher_branch(double probability, double derivative, double kappa) {
    if (probability <= 0.0) {
        if (std::abs(derivative) < 1e-12)
            return 0.0;
        throw PreconditionError("fisher_two_outcome: degenerate outcome probability at kappa = " +
                                std::to_string(kappa));
    }
    return derivative * derivative / probability;
}

} // namespace

FisherPoint fisher_two_outcome_at(const EstimationProtocol& protocol, double kappa) {
    const double step = std::max(fd_step_floor, std::abs(kappa) / 10.0);
    const auto [p0, q0] = protocol.outcome_probabilities(kappa);
    const auto [pp, qp] = protocol.outcome_probabilities(kappa + step);
    const auto [pm, qm] = protocol.outcome_probabilities(kappa - step);
    const double dp = (pp - pm) / (2.0 * step);
    const double dq = (qp - qm) / (2.0 * step);
    const double fisher = fisher_branch(p0, dp, kappa) + fisher_branch(q0, dq, kappa);
    return {kappa, fisher, p0};
}

std::vector<FisherPoint> fisher_two_outcome(const EstimationProtocol& protocol,
                                            const std::vector<double>& kappa_grid) {
    std::vector<FisherPoint> points;
    points.reserve(kappa_grid.size());
    for (double kappa : kappa_grid)
        points.push_back(fisher_two_outcome_at(protocol, kappa));
    return points;
}

double fisher_kappa_zero(const EstimationProtocol& protocol, double kappa0, int levels) {
    if (kappa0 <= 0.0 || levels < 1 || levels > 10)
        throw PreconditionError("fisher_kappa_zero: need kappa0 > 0 and 1 <= levels <= 10");
    // Richardson table on the halving sequence kappa0 / 2^m.
    std::vector<std::vector<double>> table(static_cast<std::size_t>(levels));
    for (int m = 0; m < levels; ++m) {
        const double kappa = kappa0 / std::pow(2.0, m);
        table[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m + 1));
        table[static_cast<std::size_t>(m)][0] = fisher_two_outcome_at(protocol, kappa).fisher;
        for (int k = 1; k <= m; ++k) {
            const double weight = std::pow(2.0, k);
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                (weight * table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)] -
                 table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)]) /
                (weight - 1.0);
        }
    }
    return table[static_cast<std::size_t>(levels - 1)][static_cast<std::size_t>(levels - 1)];
}

double fisher_limit_commutator(const EstimationProtocol& protocol) {
    if (protocol.mixed())
        return fisher_mixed(protocol);
    return 4.0 * dense_commutator_variance(protocol.pure_probe(), protocol.generator(),
                                           protocol.residue());
}

double fisher_symmetry_adapted(const EstimationProtocol& protocol) {
    if (protocol.mixed())
        throw PreconditionError("fisher_symmetry_adapted: use fisher_mixed for mixed probes");
    if (protocol.residue() != 0)
        throw PreconditionError(
            "fisher_symmetry_adapted: the adapted variance forms assume the residue-0 outcome");
    const ModeLayout& layout = protocol.layout();
    const int n = layout.spatial;
    const OneBodyGenerator& g = protocol.generator();

    Eigen::MatrixXcd adapted;
    switch (protocol.probe_symmetry()) {
        case ProbeSymmetry::PlusEigenstate: {
            adapted = static_cast<double>(n) * g.matrix();
            for (int l = 0; l < n; ++l)
                adapted -= conjugate_by_cyclic_shift(g, l).matrix();
            break;
        }
        case ProbeSymmetry::MinusEigenstate: {
            if (n % 2 != 0)
                throw PreconditionError(
                    "fisher_symmetry_adapted: -1 eigenstates require an even mode count");
            adapted = Eigen::MatrixXcd::Zero(layout.flat_size(), layout.flat_size());
            for (int l = 0; l < n; ++l) {
                const double sign = (l % 2 == 0) ? 1.0 : -1.0;
                adapted += sign * conjugate_by_cyclic_shift(g, l).matrix();
            }
            break;
        }
        default:
            throw PreconditionError(
                "fisher_symmetry_adapted: probe is not a +-1 eigenstate of the cyclic shift");
    }
    const OneBodyGenerator adapted_generator(layout, std::move(adapted));
    return 4.0 / (static_cast<double>(n) * n) *
           one_body_variance(adapted_generator, protocol.pure_probe());
}

double fisher_mixed(const EstimationProtocol& protocol) {
    if (!protocol.mixed())
        throw PreconditionError("fisher_mixed: protocol has a pure probe");
    const double trace = protocol.mixed_projector_trace();
    if (std::abs(trace) > tol::state_precondition &&
        std::abs(trace - 1.0) > tol::state_precondition)
        throw PreconditionError("fisher_mixed: tr(rho Pi) = " + std::to_string(trace) +
                                " is neither 0 nor 1");

    CompensatedSum weighted;
    for (const auto& [weight, component] : protocol.mixed_probe().components())
        weighted.add(weight * dense_commutator_variance(component, protocol.generator(),
                                                        protocol.residue()));
    const double fisher = 4.0 * weighted.value();

    // With tr(rho P) = +-1 every component is a shift eigenstate and the
    // weighted symmetry-adapted variances must reproduce the same number.
    const Complex shift_trace = protocol.mixed_shift_trace();
    const bool plus = std::abs(shift_trace - Complex{1.0, 0.0}) <= tol::state_precondition;
    const bool minus = std::abs(shift_trace + Complex{1.0, 0.0}) <= tol::state_precondition;
    if (protocol.residue() == 0 && (plus || minus)) {
        const ModeLayout& layout = protocol.layout();
        const int n = layout.spatial;
        const OneBodyGenerator& g = protocol.generator();
        Eigen::MatrixXcd adapted = Eigen::MatrixXcd::Zero(layout.flat_size(), layout.flat_size());
        if (plus) {
            adapted = static_cast<double>(n) * g.matrix();
            for (int l = 0; l < n; ++l)
                adapted -= conjugate_by_cyclic_shift(g, l).matrix();
        } else {
            for (int l = 0; l < n; ++l) {
                const double sign = (l % 2 == 0) ? 1.0 : -1.0;
                adapted += sign * conjugate_by_cyclic_shift(g, l).matrix();
            }
        }
        const OneBodyGenerator adapted_generator(layout, std::move(adapted));
        CompensatedSum adapted_sum;
        for (const auto& [weight, component] : protocol.mixed_probe().components())
            adapted_sum.add(weight * one_body_variance(adapted_generator, component));
        const double adapted_fisher =
            4.0 / (static_cast<double>(n) * n) * adapted_sum.value();
        if (std::abs(adapted_fisher - fisher) > tol::variance_match * std::max(1.0, fisher))
            throw IdentityError("fisher_mixed: commutator and symmetry-adapted variances disagree (" +
                                std::to_string(fisher) + " vs " + std::to_string(adapted_fisher) +
                                ")");
    }
    return fisher;
}

Eigen::MatrixXcd effective_generator_matrix(const OneBodyGenerator& g, ProbeSymmetry symmetry) {
    const ModeLayout& layout = g.layout();
    const int n = layout.spatial;
    Eigen::MatrixXcd effective = Eigen::MatrixXcd::Zero(layout.flat_size(), layout.flat_size());
    switch (symmetry) {
        case ProbeSymmetry::PlusEigenstate: {
            effective = g.matrix();
            for (int l = 0; l < n; ++l)
                effective -= conjugate_by_cyclic_shift(g, l).matrix() / static_cast<double>(n);
            break;
        }
        case ProbeSymmetry::MinusEigenstate: {
            if (n % 2 != 0)
                throw PreconditionError(
                    "effective_generator_matrix: -1 eigenstates require an even mode count");
            for (int l = 0; l < n; ++l) {
                const double sign = (l % 2 == 0) ? 1.0 : -1.0;
                effective += sign * conjugate_by_cyclic_shift(g, l).matrix() / static_cast<double>(n);
            }
            break;
        }
        default:
            throw PreconditionError("effective_generator_matrix: probe symmetry must be +-1");
    }
    return effective;
}

FockState symmetrize_by_predft(const FockState& state) {
    require_normalized(state, "symmetrize_by_predft");
    const ModeLayout& layout = state.layout();
    const int n = layout.spatial;
    std::optional<int> residue;
    for (const auto& [key, amp] : state.amplitudes()) {
        const auto spatial = key.spatial_totals(layout);
        long long weighted = 0;
        for (int k = 0; k < n; ++k)
            weighted += static_cast<long long>(k) * spatial[static_cast<std::size_t>(k)];
        const int r = static_cast<int>(weighted % n);
        if (!residue)
            residue = r;
        else if (*residue != r)
            throw PreconditionError(
                "symmetrize_by_predft: input has no definite value of sum k m_k mod n");
    }
    if (!residue)
        throw PreconditionError("symmetrize_by_predft: zero state");

    const FockState out = apply_to_state(dft_unitary(layout), state);
    // The output is a shift eigenstate with eigenvalue omega^r: P (U psi) =
    // U D psi = omega^r U psi.
    const FockState shifted =
        apply_spatial_permutation(out, cyclic_shift_permutation(n));
    const double deviation = difference_norm(shifted, out, unit_root(n, *residue));
    if (deviation > tol::identity_check)
        throw IdentityError("symmetrize_by_predft: output misses the omega^r eigenstate property "
                            "by " + std::to_string(deviation));
    return out;
}

} // namespace homsym
