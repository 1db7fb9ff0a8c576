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

TEST_CASE("vacuum basis state has norm one and sector zero") {
    const FockState vac = vacuum_state(make_layout(3, 2));
    CHECK(vac.norm() == Approx(1.0));
    CHECK(photon_number_sector(vac) == 0);
}

TEST_CASE("distinct single occupations need no factorial correction") {
    const FockState pair = testing::photon_pair(0, 0);
    CHECK(pair.norm() == Approx(1.0));
    CHECK(pair.term_count() == 1);
}

TEST_CASE("doubly occupied mode carries the right number expectation") {
    const ModeLayout layout = make_layout(2, 1);
    const FockState two = basis_state(layout, {2, 0});
    CHECK(one_body_expectation(number_generator(layout, 0), two) == Approx(2.0));
    CHECK(two.norm() == Approx(1.0));
}

TEST_CASE("superpose drops zero-coefficient terms") {
    const ModeLayout layout = make_layout(2, 1);
    const FockState a = basis_state(layout, {1, 0});
    const FockState b = basis_state(layout, {0, 1});
    const FockState result = superpose({{Complex{1.0, 0.0}, a}, {Complex{0.0, 0.0}, b}});
    CHECK(result.term_count() == 1);
    CHECK(std::abs(result.amplitude(OccupationVector({1, 0})) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("superpose of orthogonal terms with 1/sqrt2 weights is normalized") {
    const double w = 1.0 / std::sqrt(2.0);
    const ModeLayout layout = make_layout(2, 1);
    const FockState result = superpose({{Complex{w, 0.0}, basis_state(layout, {1, 0})},
                                        {Complex{w, 0.0}, basis_state(layout, {0, 1})}});
    CHECK(result.norm() == Approx(1.0));
}

TEST_CASE("full cancellation yields a flagged zero state") {
    const FockState psi = testing::photon_pair(0, 0);
    const double w = 1.0 / std::sqrt(2.0);
    const FockState zero =
        superpose({{Complex{w, 0.0}, psi}, {Complex{-w, 0.0}, psi}});
    CHECK(zero.is_zero());
    CHECK(zero.norm() == 0.0);
    CHECK_THROWS_AS(zero.normalized(), PreconditionError);
}

TEST_CASE("superpose rejects empty input and layout mismatches") {
    CHECK_THROWS_AS(superpose({}), PreconditionError);
    const FockState a = vacuum_state(make_layout(2, 1));
    const FockState b = vacuum_state(make_layout(3, 1));
    CHECK_THROWS_AS(superpose({{Complex{1.0, 0.0}, a}, {Complex{1.0, 0.0}, b}}),
                    PreconditionError);
}

TEST_CASE("inner product basics") {
    const ModeLayout layout = make_layout(2, 1);
    const FockState vac = vacuum_state(layout);
    CHECK(std::abs(inner_product(vac, vac) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(inner_product(basis_state(layout, {1, 0}), basis_state(layout, {0, 1}))) ==
          0.0);
    CHECK_THROWS_AS(inner_product(vac, vacuum_state(make_layout(3, 1))), PreconditionError);
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
    rnd::Source rng(11);
    const ModeLayout layout = make_layout(3, 2);
    for (int round = 0; round < 25; ++round) {
        const FockState a = rnd::random_state(rng, layout, 2, 3);
        const FockState b = rnd::random_state(rng, layout, 2, 3);
        const Complex alpha = rng.complex_normal();
        const Complex lhs = inner_product(a, superpose({{alpha, b}}));
        const Complex rhs = alpha * inner_product(a, b);
        CHECK(std::abs(lhs - rhs) < 1e-12);
        CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-12);
    }
}

TEST_CASE("basis states are pairwise orthonormal") {
    const ModeLayout layout = make_layout(2, 2);
    const std::vector<std::vector<int>> keys{{1, 0, 1, 0}, {0, 1, 1, 0}, {2, 0, 0, 0}, {0, 0, 0, 2}};
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = 0; j < keys.size(); ++j) {
            const Complex overlap =
                inner_product(basis_state(layout, keys[i]), basis_state(layout, keys[j]));
            CHECK(std::abs(overlap - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0})) < 1e-15);
        }
}

TEST_CASE("norm is independent of amplitude-map insertion order") {
    const ModeLayout layout = make_layout(2, 2);
    FockState::AmplitudeMap forward;
    forward[OccupationVector({1, 0, 1, 0})] = Complex{0.3, 0.1};
    forward[OccupationVector({0, 1, 0, 1})] = Complex{-0.2, 0.7};
    forward[OccupationVector({2, 0, 0, 0})] = Complex{0.05, -0.4};
    FockState::AmplitudeMap backward;
    backward[OccupationVector({2, 0, 0, 0})] = Complex{0.05, -0.4};
    backward[OccupationVector({0, 1, 0, 1})] = Complex{-0.2, 0.7};
    backward[OccupationVector({1, 0, 1, 0})] = Complex{0.3, 0.1};
    CHECK(FockState(layout, forward).norm() == FockState(layout, backward).norm());
}

TEST_CASE("amplitudes below the prune threshold are dropped") {
    const ModeLayout layout = make_layout(2, 1);
    FockState::AmplitudeMap map;
    map[OccupationVector({1, 0})] = Complex{1.0, 0.0};
    map[OccupationVector({0, 1})] = Complex{1e-15, 0.0};
    const FockState state(layout, std::move(map));
    CHECK(state.term_count() == 1);
}

TEST_CASE("photon number sector detection") {
    const ModeLayout layout = make_layout(3, 1);
    CHECK(photon_number_sector(testing::one_photon_per_mode(layout)) == 3);
    CHECK(photon_number_sector(vacuum_state(layout)) == 0);
    const double w = 1.0 / std::sqrt(2.0);
    const FockState mixed_sector = superpose({{Complex{w, 0.0}, basis_state(layout, {1, 0, 0})},
                                              {Complex{w, 0.0}, basis_state(layout, {1, 1, 0})}});
    CHECK(!photon_number_sector(mixed_sector).has_value());
}

TEST_CASE("occupation vectors reject negative counts") {
    CHECK_THROWS_AS(OccupationVector({1, -1}), PreconditionError);
    CHECK_THROWS_AS(basis_state(make_layout(2, 1), {1, 0, 0}), PreconditionError);
}

TEST_CASE("mixed states validate weights and component norms") {
    const ModeLayout layout = make_layout(2, 1);
    const FockState a = basis_state(layout, {1, 0});
    const FockState b = basis_state(layout, {0, 1});
    CHECK_NOTHROW(MixedState(layout, {{0.5, a}, {0.5, b}}));
    CHECK_THROWS_AS(MixedState(layout, {{0.6, a}, {0.6, b}}), PreconditionError);
    CHECK_THROWS_AS(MixedState(layout, {{-0.2, a}, {1.2, b}}), PreconditionError);
    const FockState unnormalized = superpose({{Complex{0.5, 0.0}, a}});
    CHECK_THROWS_AS(MixedState(layout, {{1.0, unnormalized}}), PreconditionError);
    CHECK_THROWS_AS(MixedState(layout, {}), PreconditionError);
}
