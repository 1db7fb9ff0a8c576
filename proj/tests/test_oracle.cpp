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
using homsym::oracle::DenseSectorBasis;
using doctest::Approx;

TEST_CASE("sector basis enumerates lexicographically with exact round trips") {
    const ModeLayout layout = make_layout(2, 1);
    const DenseSectorBasis basis(layout, 2);
    REQUIRE(basis.dimension() == 3);
    CHECK(basis.element(0).counts() == std::vector<int>{0, 2});
    CHECK(basis.element(1).counts() == std::vector<int>{1, 1});
    CHECK(basis.element(2).counts() == std::vector<int>{2, 0});
    for (int i = 0; i < basis.dimension(); ++i)
        CHECK(basis.index_of(basis.element(i)) == i);
    CHECK_THROWS_AS(basis.index_of(OccupationVector({3, 0})), PreconditionError);
}

TEST_CASE("sector dimension formula and the desk-scale cap") {
    const ModeLayout layout = make_layout(4, 2);
    CHECK(DenseSectorBasis::dimension_for(layout, 4) == 330);
    CHECK_NOTHROW(DenseSectorBasis(layout, 4));
    CHECK_THROWS_AS(DenseSectorBasis(make_layout(8, 1), 11), PreconditionError);
}

TEST_CASE("permanent on small matrices") {
    Eigen::MatrixXcd one(1, 1);
    one << Complex{2.0, 1.0};
    CHECK(std::abs(oracle::permanent(one) - Complex{2.0, 1.0}) == 0.0);

    Eigen::MatrixXcd two(2, 2);
    two << 1.0, 2.0, 3.0, 4.0;
    CHECK(std::abs(oracle::permanent(two) - Complex{10.0, 0.0}) < 1e-14);

    CHECK(std::abs(oracle::permanent(Eigen::MatrixXcd(0, 0)) - Complex{1.0, 0.0}) == 0.0);
}

TEST_CASE("embedding the identity and the HOM sector matrix") {
    const ModeLayout layout = make_layout(2, 1);
    const DenseSectorBasis basis(layout, 2);
    CHECK((oracle::embed_unitary(basis, identity_unitary(layout)) -
           Eigen::MatrixXcd::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    const Eigen::MatrixXcd hom = oracle::embed_unitary(basis, bs_unitary(layout, 0, 0, 0));
    const int col = basis.index_of(OccupationVector({1, 1}));
    const double w = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(hom(basis.index_of(OccupationVector({2, 0})), col) - Complex{w, 0.0}) < 1e-12);
    CHECK(std::abs(hom(basis.index_of(OccupationVector({0, 2})), col) + Complex{w, 0.0}) < 1e-12);
    CHECK(std::abs(hom(col, col)) < 1e-12);
}

TEST_CASE("embedded generators act by ladder algebra") {
    const ModeLayout layout = make_layout(2, 1);
    const DenseSectorBasis basis(layout, 3);
    const OneBodyGenerator identity_h(layout, Eigen::MatrixXcd::Identity(2, 2));
    CHECK((oracle::embed_generator(basis, identity_h) -
           3.0 * Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    const Eigen::MatrixXcd number = oracle::embed_generator(basis, number_generator(layout, 0));
    for (int i = 0; i < basis.dimension(); ++i)
        CHECK(number(i, i).real() == Approx(static_cast<double>(basis.element(i)[0])));
}

TEST_CASE("dense residue projectors have spectrum {0, 1}") {
    const ModeLayout layout = make_layout(3, 1);
    const DenseSectorBasis basis(layout, 2);
    for (int j = 0; j < 3; ++j) {
        const Eigen::MatrixXcd projector = oracle::dense_projector_residue(basis, j);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(projector);
        for (int i = 0; i < basis.dimension(); ++i) {
            const double eigenvalue = solver.eigenvalues()(i);
            CHECK(std::min(std::abs(eigenvalue), std::abs(eigenvalue - 1.0)) < 1e-9);
        }
    }
    // Pi_0 fixes a cyclic-invariant vector.
    const FockState invariant = testing::one_photon_per_mode(layout);
    const DenseSectorBasis sector3(layout, 3);
    const Eigen::VectorXcd vec = oracle::embed_state(sector3, invariant);
    CHECK((oracle::dense_projector_residue(sector3, 0) * vec - vec).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dense exponential basics") {
    rnd::Source rng(71);
    const Eigen::MatrixXcd h = rnd::random_hermitian(rng, 6);
    CHECK((oracle::dense_expm(h, 0.0) - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() <
          1e-15);

    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(3, 3);
    diag(0, 0) = 0.5;
    diag(1, 1) = -1.0;
    diag(2, 2) = 2.0;
    const Eigen::MatrixXcd e = oracle::dense_expm(diag, 0.7);
    for (int i = 0; i < 3; ++i) {
        const double angle = 0.7 * diag(i, i).real();
        CHECK(std::abs(e(i, i) - Complex{std::cos(angle), std::sin(angle)}) < 1e-12);
    }

    const Eigen::MatrixXcd u = oracle::dense_expm(h, 1.3);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK_THROWS_AS(oracle::dense_expm(h + Eigen::MatrixXcd::Random(6, 6), 0.1),
                    PreconditionError);
}

TEST_CASE("sld qfi limits and convexity") {
    rnd::Source rng(73);
    const ModeLayout layout = make_layout(2, 2);
    const DenseSectorBasis basis(layout, 1);
    const OneBodyGenerator g(layout, rnd::random_hermitian(rng, 4));
    const Eigen::MatrixXcd h = oracle::embed_generator(basis, g);

    const FockState psi = rnd::random_state(rng, layout, 1, 3);
    CHECK(oracle::mixed_qfi_sld(oracle::density_matrix(basis, MixedState(psi)), h) ==
          Approx(qfi(psi, g)).epsilon(1e-9));

    const Eigen::MatrixXcd mixed =
        Eigen::MatrixXcd::Identity(basis.dimension(), basis.dimension()) /
        static_cast<double>(basis.dimension());
    CHECK(oracle::mixed_qfi_sld(mixed, h) == Approx(0.0).epsilon(1e-12));

    const FockState phi = rnd::random_state(rng, layout, 1, 3);
    const MixedState rank_two(layout, {{0.6, psi}, {0.4, phi}});
    const double mixed_qfi = oracle::mixed_qfi_sld(oracle::density_matrix(basis, rank_two), h);
    const double convex_bound = 0.6 * qfi(psi, g) + 0.4 * qfi(phi, g);
    CHECK(mixed_qfi <= convex_bound + 1e-9);

    Eigen::MatrixXcd traceless = Eigen::MatrixXcd::Identity(4, 4);
    CHECK_THROWS_AS(oracle::mixed_qfi_sld(traceless, h), PreconditionError);
}

TEST_CASE("embed_state refuses off-sector input") {
    const ModeLayout layout = make_layout(2, 1);
    const DenseSectorBasis basis(layout, 2);
    CHECK_THROWS_AS(oracle::embed_state(basis, vacuum_state(layout)), PreconditionError);
    const FockState extracted =
        oracle::extract_state(basis, Eigen::VectorXcd::Unit(basis.dimension(), 1));
    CHECK(std::abs(extracted.amplitude(OccupationVector({1, 1})) - Complex{1.0, 0.0}) == 0.0);
}
