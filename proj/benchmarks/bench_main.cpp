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

#include <benchmark/benchmark.h>

#include "homsym/homsym.hpp"
#include "homsym/random.hpp"

namespace {

using namespace homsym;

FockState bench_state(int ports, int internal, int photons) {
    rnd::Source rng(12345);
    return rnd::random_state(rng, make_layout(ports, internal), photons, 4);
}

void BM_apply_dft(benchmark::State& state) {
    const int ports = static_cast<int>(state.range(0));
    const int photons = static_cast<int>(state.range(1));
    const FockState psi = bench_state(ports, 2, photons);
    const ModeUnitary dft = dft_unitary(psi.layout());
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_to_state(dft, psi));
    }
}
BENCHMARK(BM_apply_dft)->Args({2, 2})->Args({3, 3})->Args({4, 4});

void BM_apply_cyclic_relabel(benchmark::State& state) {
    const FockState psi = bench_state(4, 3, 4);
    const ModeUnitary shift = cyclic_permutation_unitary(psi.layout());
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_to_state(shift, psi));
    }
}
BENCHMARK(BM_apply_cyclic_relabel);

void BM_output_distribution(benchmark::State& state) {
    const int ports = static_cast<int>(state.range(0));
    const FockState psi = bench_state(ports, 2, 3);
    const ModeUnitary dft = dft_unitary(psi.layout());
    for (auto _ : state) {
        benchmark::DoNotOptimize(output_distribution(psi, dft));
    }
}
BENCHMARK(BM_output_distribution)->Arg(2)->Arg(3)->Arg(4);

void BM_residue_weights(benchmark::State& state) {
    const FockState psi = bench_state(4, 2, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(residue_weights(psi));
    }
}
BENCHMARK(BM_residue_weights);

void BM_embed_unitary(benchmark::State& state) {
    const int photons = static_cast<int>(state.range(0));
    const ModeLayout layout = make_layout(3, 1);
    rnd::Source rng(99);
    const ModeUnitary u = ModeUnitary::from_full(layout, rnd::random_unitary(rng, 3));
    const oracle::DenseSectorBasis basis(layout, photons);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::embed_unitary(basis, u));
    }
}
BENCHMARK(BM_embed_unitary)->Arg(2)->Arg(3)->Arg(4);

void BM_fisher_point(benchmark::State& state) {
    const ModeLayout layout = make_layout(2, 2);
    rnd::Source rng(7);
    const FockState probe = rnd::random_shift_eigenstate(rng, layout, 2, 0, 4);
    const OneBodyGenerator g = alternating_delay_generator(layout, {0.3, 1.1});
    const EstimationProtocol protocol(probe, g, bs_unitary(layout, 0, 0, 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fisher_two_outcome_at(protocol, 0.1));
    }
}
BENCHMARK(BM_fisher_point);

} // namespace

BENCHMARK_MAIN();
