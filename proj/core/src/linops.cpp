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

#include "homsym/linops.hpp"

#include <cmath>

#include "homsym/symmetry.hpp"
#include "homsym/tolerances.hpp"

namespace homsym {

namespace {

void require_unitary(const Eigen::MatrixXcd& m, const char* where) {
    const Eigen::MatrixXcd gram = m.adjoint() * m;
    const double deviation =
        (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
    if (deviation > tol::unitarity)
        throw PreconditionError(std::string(where) + ": matrix is not unitary, max |U^dag U - I| = " +
                                std::to_string(deviation));
}

void require_spatial_block_form(const Eigen::MatrixXcd& m, const ModeLayout& layout) {
    for (int s = 0; s < layout.spatial; ++s)
        for (int i = 0; i < layout.internal; ++i)
            for (int t = 0; t < layout.spatial; ++t)
                for (int k = 0; k < layout.internal; ++k) {
                    const Complex v = m(t * layout.internal + k, s * layout.internal + i);
                    const Complex expected =
                        (i == k) ? m(t * layout.internal, s * layout.internal) : Complex{0.0, 0.0};
                    if (std::abs(v - expected) > 1e-12)
                        throw PreconditionError(
                            "spatial-only tag requires block form M (x) I_d");
                }
}

Eigen::MatrixXcd lift_spatial(const Eigen::MatrixXcd& spatial, const ModeLayout& layout) {
    const int d = layout.internal;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(layout.flat_size(), layout.flat_size());
    for (int s = 0; s < layout.spatial; ++s)
        for (int t = 0; t < layout.spatial; ++t)
            for (int i = 0; i < d; ++i)
                full(t * d + i, s * d + i) = spatial(t, s);
    return full;
}

void require_spatial_permutation(const std::vector<int>& sigma, int n, const char* where) {
    if (static_cast<int>(sigma.size()) != n)
        throw PreconditionError(std::string(where) + ": permutation length " +
                                std::to_string(sigma.size()) + " does not match " +
                                std::to_string(n) + " spatial modes");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw PreconditionError(std::string(where) + ": not a bijection of [0, n)");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

/// Lift a spatial permutation + per-port phases to the flattened monomial
/// table: column (s, i) maps to row (sigma(s), i) with phase[s].
ModeUnitary::Monomial lift_monomial(const std::vector<int>& sigma,
                                    const std::vector<Complex>& spatial_phase,
                                    const ModeLayout& layout) {
    const int d = layout.internal;
    ModeUnitary::Monomial mono;
    mono.row.resize(static_cast<std::size_t>(layout.flat_size()));
    mono.phase.resize(static_cast<std::size_t>(layout.flat_size()));
    for (int s = 0; s < layout.spatial; ++s)
        for (int i = 0; i < d; ++i) {
            mono.row[static_cast<std::size_t>(s * d + i)] = sigma[static_cast<std::size_t>(s)] * d + i;
            mono.phase[static_cast<std::size_t>(s * d + i)] = spatial_phase[static_cast<std::size_t>(s)];
        }
    return mono;
}

FockState apply_monomial(const ModeUnitary::Monomial& mono, const FockState& state) {
    FockState::AmplitudeMap out;
    const int flat = static_cast<int>(mono.row.size());
    for (const auto& [key, amp] : state.amplitudes()) {
        std::vector<int> target(static_cast<std::size_t>(flat), 0);
        Complex phase{1.0, 0.0};
        for (int j = 0; j < flat; ++j) {
            const int c = key[j];
            if (c == 0)
                continue;
            target[static_cast<std::size_t>(mono.row[static_cast<std::size_t>(j)])] = c;
            phase *= complex_pow(mono.phase[static_cast<std::size_t>(j)], c);
        }
        out[OccupationVector(std::move(target))] += amp * phase;
    }
    return FockState(state.layout(), std::move(out));
}

/// Multinomial expansion of one creation-operator monomial under
/// a_j^dag -> sum_k M(k, j) a_k^dag. Exponential in photons per mode, which
/// is fine at desk scale; requests beyond the term budget are refused
/// instead of silently running for hours.
class GeneralApplier {
public:
    static constexpr double expansion_budget = 2e7;

    // C(m + rows - 1, m): compositions of m photons into `rows` slots.
    static double compositions(int photons, std::size_t rows) {
        double value = 1.0;
        for (int i = 1; i <= photons; ++i)
            value *= static_cast<double>(rows - 1 + static_cast<std::size_t>(i)) / i;
        return value;
    }

    GeneralApplier(const Eigen::MatrixXcd& matrix, const ModeLayout& layout)
        : matrix_(matrix), flat_(layout.flat_size()) {
        nonzero_rows_.resize(static_cast<std::size_t>(flat_));
        for (int j = 0; j < flat_; ++j)
            for (int k = 0; k < flat_; ++k)
                if (matrix_(k, j) != Complex{0.0, 0.0})
                    nonzero_rows_[static_cast<std::size_t>(j)].push_back(k);
    }

    FockState::AmplitudeMap apply(const FockState& state) {
        FockState::AmplitudeMap out;
        for (const auto& [key, amp] : state.amplitudes()) {
            occupied_.clear();
            double input_fact = 1.0;
            double expansion_terms = 1.0;
            for (int j = 0; j < flat_; ++j)
                if (key[j] > 0) {
                    occupied_.emplace_back(j, key[j]);
                    input_fact *= factorial_as_double(key[j]);
                    expansion_terms *= compositions(
                        key[j], nonzero_rows_[static_cast<std::size_t>(j)].size());
                }
            if (expansion_terms > expansion_budget)
                throw PreconditionError(
                    "apply_to_state: the exact multinomial expansion of this state needs ~" +
                    std::to_string(static_cast<long long>(expansion_terms)) +
                    " terms, beyond the desk-scale budget of " +
                    std::to_string(static_cast<long long>(expansion_budget)));
            target_.assign(static_cast<std::size_t>(flat_), 0);
            out_ = &out;
            scale_ = amp / std::sqrt(input_fact);
            expand_mode(0, Complex{1.0, 0.0});
        }
        return out;
    }

private:
    void expand_mode(std::size_t idx, Complex coeff) {
        if (idx == occupied_.size()) {
            double target_fact = 1.0;
            for (int t : target_)
                if (t > 1)
                    target_fact *= factorial_as_double(t);
            (*out_)[OccupationVector(target_)] += scale_ * coeff * std::sqrt(target_fact);
            return;
        }
        const auto [mode, count] = occupied_[idx];
        distribute(idx, mode, 0, count, coeff * factorial_as_double(count));
    }

    void distribute(std::size_t idx, int mode, std::size_t row_pos, int remaining, Complex coeff) {
        const auto& rows = nonzero_rows_[static_cast<std::size_t>(mode)];
        if (row_pos + 1 == rows.size()) {
            const int k = rows[row_pos];
            const Complex entry = matrix_(k, mode);
            const Complex w =
                coeff * complex_pow(entry, remaining) / factorial_as_double(remaining);
            target_[static_cast<std::size_t>(k)] += remaining;
            expand_mode(idx + 1, w);
            target_[static_cast<std::size_t>(k)] -= remaining;
            return;
        }
        const int k = rows[row_pos];
        const Complex entry = matrix_(k, mode);
        Complex w = coeff;
        for (int q = 0; q <= remaining; ++q) {
            target_[static_cast<std::size_t>(k)] += q;
            distribute(idx, mode, row_pos + 1, remaining - q, w / factorial_as_double(q));
            target_[static_cast<std::size_t>(k)] -= q;
            w *= entry;
            // w now carries entry^{q+1}; division by q! happens per branch.
        }
    }

    const Eigen::MatrixXcd& matrix_;
    int flat_;
    std::vector<std::vector<int>> nonzero_rows_;
    std::vector<std::pair<int, int>> occupied_;
    std::vector<int> target_;
    FockState::AmplitudeMap* out_ = nullptr;
    Complex scale_{0.0, 0.0};
};

} // namespace

ModeUnitary::ModeUnitary(ModeLayout layout, Eigen::MatrixXcd matrix, bool spatial_only,
                         std::optional<Monomial> monomial)
    : layout_(layout), matrix_(std::move(matrix)), spatial_only_(spatial_only),
      monomial_(std::move(monomial)) {}

ModeUnitary ModeUnitary::from_spatial(const ModeLayout& layout, const Eigen::MatrixXcd& spatial) {
    if (spatial.rows() != layout.spatial || spatial.cols() != layout.spatial)
        throw PreconditionError("from_spatial: expected a " + std::to_string(layout.spatial) +
                                "x" + std::to_string(layout.spatial) + " matrix");
    require_unitary(spatial, "ModeUnitary");
    return ModeUnitary(layout, lift_spatial(spatial, layout), true, std::nullopt);
}

ModeUnitary ModeUnitary::from_full(const ModeLayout& layout, const Eigen::MatrixXcd& full,
                                   bool spatial_only) {
    if (full.rows() != layout.flat_size() || full.cols() != layout.flat_size())
        throw PreconditionError("from_full: expected a " + std::to_string(layout.flat_size()) +
                                "x" + std::to_string(layout.flat_size()) + " matrix for layout " +
                                layout.describe());
    require_unitary(full, "ModeUnitary");
    if (spatial_only)
        require_spatial_block_form(full, layout);
    return ModeUnitary(layout, full, spatial_only, std::nullopt);
}

ModeUnitary ModeUnitary::adjoint() const {
    std::optional<Monomial> mono;
    if (monomial_) {
        const std::size_t flat = monomial_->row.size();
        mono.emplace();
        mono->row.resize(flat);
        mono->phase.resize(flat);
        for (std::size_t j = 0; j < flat; ++j) {
            mono->row[static_cast<std::size_t>(monomial_->row[j])] = static_cast<int>(j);
            mono->phase[static_cast<std::size_t>(monomial_->row[j])] = std::conj(monomial_->phase[j]);
        }
    }
    return ModeUnitary(layout_, matrix_.adjoint(), spatial_only_, std::move(mono));
}

ModeUnitary bs_unitary(const ModeLayout& layout, double theta, double phi, double tau) {
    if (layout.spatial != 2)
        throw PreconditionError("bs_unitary: a beam splitter needs exactly 2 spatial modes, got " +
                                std::to_string(layout.spatial));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex global = Complex{std::cos(tau), std::sin(tau)} * inv_sqrt2;
    Eigen::MatrixXcd m(2, 2);
    m(0, 0) = global * Complex{std::cos(theta), std::sin(theta)};
    m(0, 1) = global * Complex{std::cos(phi), -std::sin(phi)};
    m(1, 0) = global * Complex{std::cos(phi), std::sin(phi)};
    m(1, 1) = -global * Complex{std::cos(theta), -std::sin(theta)};
    return ModeUnitary::from_spatial(layout, m);
}

ModeUnitary dft_unitary(const ModeLayout& layout) {
    const int n = layout.spatial;
    if (n < 2)
        throw PreconditionError("dft_unitary: need at least 2 spatial modes");
    const auto roots = unit_roots(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXcd m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            m(k, l) = roots[static_cast<std::size_t>((static_cast<long long>(k) * l) % n)] * scale;
    return ModeUnitary::from_spatial(layout, m);
}

ModeUnitary permutation_unitary(const ModeLayout& layout, const std::vector<int>& sigma) {
    const int n = layout.spatial;
    require_spatial_permutation(sigma, n, "permutation_unitary");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        m(sigma[static_cast<std::size_t>(j)], j) = 1.0;
    ModeUnitary u = ModeUnitary::from_spatial(layout, m);
    u.monomial_ = lift_monomial(sigma, std::vector<Complex>(static_cast<std::size_t>(n), Complex{1.0, 0.0}),
                                layout);
    return u;
}

ModeUnitary cyclic_permutation_unitary(const ModeLayout& layout) {
    return permutation_unitary(layout, cyclic_shift_permutation(layout.spatial));
}

ModeUnitary diagonal_phase_unitary(const ModeLayout& layout) {
    const int n = layout.spatial;
    if (n < 2)
        throw PreconditionError("diagonal_phase_unitary: need at least 2 spatial modes");
    const auto roots = unit_roots(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::vector<Complex> phases(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        m(s, s) = roots[static_cast<std::size_t>(s)];
        identity[static_cast<std::size_t>(s)] = s;
        phases[static_cast<std::size_t>(s)] = roots[static_cast<std::size_t>(s)];
    }
    ModeUnitary u = ModeUnitary::from_spatial(layout, m);
    u.monomial_ = lift_monomial(identity, phases, layout);
    return u;
}

ModeUnitary identity_unitary(const ModeLayout& layout) {
    const int n = layout.spatial;
    std::vector<int> identity(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        identity[static_cast<std::size_t>(s)] = s;
    ModeUnitary u = ModeUnitary::from_spatial(layout, Eigen::MatrixXcd::Identity(n, n));
    u.monomial_ = lift_monomial(identity, std::vector<Complex>(static_cast<std::size_t>(n), Complex{1.0, 0.0}),
                                layout);
    return u;
}

ModeUnitary compose(const ModeUnitary& a, const ModeUnitary& b) {
    require_same_layout(a.layout(), b.layout(), "compose");
    std::optional<ModeUnitary::Monomial> mono;
    if (a.monomial() && b.monomial()) {
        const auto& ma = *a.monomial();
        const auto& mb = *b.monomial();
        mono.emplace();
        mono->row.resize(mb.row.size());
        mono->phase.resize(mb.row.size());
        for (std::size_t j = 0; j < mb.row.size(); ++j) {
            const int mid = mb.row[j];
            mono->row[j] = ma.row[static_cast<std::size_t>(mid)];
            mono->phase[j] = ma.phase[static_cast<std::size_t>(mid)] * mb.phase[j];
        }
    }
    return ModeUnitary(a.layout(), a.matrix() * b.matrix(), a.spatial_only() && b.spatial_only(),
                       std::move(mono));
}

FockState apply_to_state(const ModeUnitary& u, const FockState& state) {
    require_same_layout(u.layout(), state.layout(), "apply_to_state");
    FockState result = [&] {
        if (u.monomial())
            return apply_monomial(*u.monomial(), state);
        GeneralApplier applier(u.matrix(), u.layout());
        return FockState(state.layout(), applier.apply(state));
    }();
    const double drift = std::abs(result.norm() - state.norm());
    if (drift > tol::norm_check * std::max(1.0, state.norm()))
        throw IdentityError("apply_to_state: norm drifted by " + std::to_string(drift));
    return result;
}

MixedState apply_to_state(const ModeUnitary& u, const MixedState& state) {
    std::vector<MixedState::Component> components;
    components.reserve(state.components().size());
    for (const auto& [weight, component] : state.components())
        components.push_back({weight, apply_to_state(u, component)});
    return MixedState(state.layout(), std::move(components));
}

} // namespace homsym
