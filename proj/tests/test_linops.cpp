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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace homsym;
using doctest::Approx;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("hadamard beam splitter at (0, 0, 0)") {
    const ModeLayout layout = make_layout(2, 1);
    const Eigen::MatrixXcd m = bs_unitary(layout, 0, 0, 0).matrix();
    const double w = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(m(0, 0) - Complex{w, 0.0}) < 1e-15);
    CHECK(std::abs(m(0, 1) - Complex{w, 0.0}) < 1e-15);
    CHECK(std::abs(m(1, 0) - Complex{w, 0.0}) < 1e-15);
    CHECK(std::abs(m(1, 1) + Complex{w, 0.0}) < 1e-15);
}

TEST_CASE("general balanced splitter is unitary with equal moduli") {
    const ModeLayout layout = make_layout(2, 1);
    rnd::Source rng(5);
    for (int round = 0; round < 25; ++round) {
        const double theta = 6.3 * (rng.uniform() - 0.5);
        const double phi = 6.3 * (rng.uniform() - 0.5);
        const double tau = 6.3 * (rng.uniform() - 0.5);
        const ModeUnitary u = bs_unitary(layout, theta, phi, tau);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                CHECK(std::abs(u.matrix()(r, c)) == Approx(1.0 / std::sqrt(2.0)));
    }
    CHECK_THROWS_AS(bs_unitary(make_layout(3, 1), 0, 0, 0), PreconditionError);
}

TEST_CASE("dft matrix essentials") {
    CHECK(max_abs(dft_unitary(make_layout(2, 1)).matrix() -
                  bs_unitary(make_layout(2, 1), 0, 0, 0).matrix()) < 1e-15);
    const Eigen::MatrixXcd u3 = dft_unitary(make_layout(3, 1)).matrix();
    CHECK(max_abs(u3.adjoint() * u3 - Eigen::MatrixXcd::Identity(3, 3)) < 1e-12);
    CHECK_THROWS_AS(dft_unitary(make_layout(1, 1)), PreconditionError);
}

TEST_CASE("dft diagonalizes the cyclic shift entrywise") {
    for (int n = 2; n <= 6; ++n) {
        const ModeLayout layout = make_layout(n, 1);
        const Eigen::MatrixXcd u = dft_unitary(layout).matrix();
        const Eigen::MatrixXcd d = diagonal_phase_unitary(layout).matrix();
        const Eigen::MatrixXcd p = cyclic_permutation_unitary(layout).matrix();
        CHECK(max_abs(u * d * u.adjoint() - p) < 1e-12);
    }
}

TEST_CASE("permutation unitaries") {
    const ModeLayout layout = make_layout(2, 1);
    CHECK(max_abs(permutation_unitary(layout, {0, 1}).matrix() -
                  Eigen::MatrixXcd::Identity(2, 2)) == 0.0);
    Eigen::MatrixXcd swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(max_abs(permutation_unitary(layout, {1, 0}).matrix() - swap) == 0.0);

    const ModeLayout four = make_layout(4, 1);
    const Eigen::MatrixXcd two_cycles = permutation_unitary(four, {1, 0, 3, 2}).matrix();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if ((r / 2) != (c / 2))
                CHECK(std::abs(two_cycles(r, c)) == 0.0);

    CHECK_THROWS_AS(permutation_unitary(layout, {0, 0}), PreconditionError);
    CHECK_THROWS_AS(permutation_unitary(layout, {0, 2}), PreconditionError);
}

TEST_CASE("diagonal phase unitary") {
    const Eigen::MatrixXcd d2 = diagonal_phase_unitary(make_layout(2, 1)).matrix();
    CHECK(std::abs(d2(0, 0) - Complex{1.0, 0.0}) == 0.0);
    CHECK(std::abs(d2(1, 1) + Complex{1.0, 0.0}) == 0.0);

    const Eigen::MatrixXcd d3 = diagonal_phase_unitary(make_layout(3, 1)).matrix();
    for (int s = 0; s < 3; ++s)
        CHECK(std::abs(d3(s, s) - unit_root(3, s)) == 0.0);

    for (int n = 2; n <= 5; ++n) {
        const ModeUnitary d = diagonal_phase_unitary(make_layout(n, 1));
        ModeUnitary power = d;
        for (int l = 1; l < n; ++l)
            power = compose(power, d);
        CHECK(max_abs(power.matrix() - Eigen::MatrixXcd::Identity(n, n)) < 1e-14);
    }
}

TEST_CASE("compose is the matrix product") {
    const ModeLayout layout = make_layout(2, 1);
    const ModeUnitary u = dft_unitary(layout);
    CHECK(max_abs(compose(u, u.adjoint()).matrix() - Eigen::MatrixXcd::Identity(2, 2)) < 1e-14);

    // U D U^dag at n = 2 is the swap.
    const ModeUnitary conjugated =
        compose(u, compose(diagonal_phase_unitary(layout), u.adjoint()));
    Eigen::MatrixXcd swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(max_abs(conjugated.matrix() - swap) < 1e-14);

    CHECK_THROWS_AS(compose(u, dft_unitary(make_layout(3, 1))), PreconditionError);
}

TEST_CASE("monomial composition stays exact") {
    const ModeLayout layout = make_layout(4, 2);
    const ModeUnitary composed =
        compose(cyclic_permutation_unitary(layout), diagonal_phase_unitary(layout));
    REQUIRE(composed.monomial().has_value());
    const ModeUnitary round_trip = compose(composed, composed.adjoint());
    REQUIRE(round_trip.monomial().has_value());
    for (std::size_t j = 0; j < round_trip.monomial()->row.size(); ++j) {
        CHECK(round_trip.monomial()->row[j] == static_cast<int>(j));
        CHECK(std::abs(round_trip.monomial()->phase[j] - Complex{1.0, 0.0}) < 1e-15);
    }
}

TEST_CASE("HOM bunching amplitudes behind the hadamard splitter") {
    const FockState in = testing::photon_pair(0, 0);
    const FockState out = apply_to_state(bs_unitary(in.layout(), 0, 0, 0), in);
    const double w = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(out.amplitude(OccupationVector({2, 0})) - Complex{w, 0.0}) < 1e-14);
    CHECK(std::abs(out.amplitude(OccupationVector({0, 2})) + Complex{w, 0.0}) < 1e-14);
    CHECK(std::abs(out.amplitude(OccupationVector({1, 1}))) < 1e-14);
}

TEST_CASE("identity application returns the same state") {
    rnd::Source rng(7);
    const ModeLayout layout = make_layout(3, 2);
    const FockState psi = rnd::random_state(rng, layout, 3, 4);
    CHECK(testing::state_distance(apply_to_state(identity_unitary(layout), psi), psi) == 0.0);
}

TEST_CASE("vacuum maps to vacuum with unit phase") {
    const ModeLayout layout = make_layout(3, 1);
    const FockState out = apply_to_state(dft_unitary(layout), vacuum_state(layout));
    CHECK(std::abs(out.amplitude(OccupationVector({0, 0, 0})) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("norm and photon sector survive arbitrary unitaries") {
    rnd::Source rng(13);
    const ModeLayout layout = make_layout(3, 1);
    for (int round = 0; round < 20; ++round) {
        const ModeUnitary u = ModeUnitary::from_full(layout, rnd::random_unitary(rng, 3));
        const FockState psi = rnd::random_state(rng, layout, 3, 4);
        const FockState out = apply_to_state(u, psi);
        CHECK(std::abs(out.norm() - psi.norm()) < 1e-10);
        CHECK(photon_number_sector(out) == photon_number_sector(psi));
    }
}

TEST_CASE("spatial-only unitaries commute with internal-diagonal ones") {
    const ModeLayout layout = make_layout(2, 2);
    const ModeUnitary spatial = dft_unitary(layout);
    CHECK(spatial.spatial_only());
    Eigen::MatrixXcd internal_diag = Eigen::MatrixXcd::Identity(4, 4);
    internal_diag(1, 1) = Complex{0.0, 1.0};
    internal_diag(3, 3) = Complex{0.0, 1.0};
    const ModeUnitary v = ModeUnitary::from_full(layout, internal_diag);
    CHECK(max_abs(compose(spatial, v).matrix() - compose(v, spatial).matrix()) < 1e-14);
}

TEST_CASE("construction rejects non-unitary matrices and bad tags") {
    const ModeLayout layout = make_layout(2, 1);
    Eigen::MatrixXcd not_unitary(2, 2);
    not_unitary << 1, 0, 0, 2;
    CHECK_THROWS_AS(ModeUnitary::from_full(layout, not_unitary), PreconditionError);

    const ModeLayout with_internal = make_layout(2, 2);
    Eigen::MatrixXcd mixes_internal = Eigen::MatrixXcd::Zero(4, 4);
    mixes_internal(0, 1) = 1;
    mixes_internal(1, 0) = 1;
    mixes_internal(2, 2) = 1;
    mixes_internal(3, 3) = 1;
    CHECK_THROWS_AS(ModeUnitary::from_full(with_internal, mixes_internal, true),
                    PreconditionError);
    CHECK_NOTHROW(ModeUnitary::from_full(with_internal, mixes_internal, false));
}

TEST_CASE("apply rejects layout mismatches") {
    CHECK_THROWS_AS(
        apply_to_state(dft_unitary(make_layout(3, 1)), vacuum_state(make_layout(2, 1))),
        PreconditionError);
}

TEST_CASE("the exact expansion refuses combinatorial blowups") {
    const ModeLayout layout = make_layout(8, 1);
    const FockState heavy = basis_state(layout, {2, 2, 2, 2, 2, 1, 0, 0});
    CHECK_THROWS_AS(apply_to_state(dft_unitary(layout), heavy), PreconditionError);
    // Exact relabeling has no such limit.
    CHECK_NOTHROW(apply_to_state(cyclic_permutation_unitary(layout), heavy));
}
