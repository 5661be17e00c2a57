// Copyright 2026 The hwproj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "hwproj/circuit_io.h"
#include "hwproj/hamming.h"
#include "hwproj/oracle.h"
#include "hwproj/scheduler.h"
#include "hwproj/states.h"

using namespace hwproj;

namespace {

void BM_alg2_exact(benchmark::State &state) {
    auto n = static_cast<uint32_t>(state.range(0));
    auto hc = build_alg2(derive_params(n));
    Rng rng(1);
    auto input = random_state(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(circuit_distribution(hc, input));
    }
}
BENCHMARK(BM_alg2_exact)->DenseRange(2, 12, 2);

void BM_resets_exact(benchmark::State &state) {
    auto n = static_cast<uint32_t>(state.range(0));
    auto hc = build_alg2_resets(derive_params(n, n));
    Rng rng(2);
    auto input = random_state(n, rng);
    RunOptions opts;
    opts.merge_equivalent = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(circuit_distribution(hc, input, opts));
    }
}
BENCHMARK(BM_resets_exact)->DenseRange(2, 6, 2);

void BM_shot(benchmark::State &state) {
    auto n = static_cast<uint32_t>(state.range(0));
    auto hc = build_alg2_resets(derive_params(n, n));
    auto frame = QubitFrame::embed(ghz_state(n), hc.layout.data_qubits, hc.circuit.num_qubits);
    Rng rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sampled(hc.circuit, frame, rng));
    }
}
BENCHMARK(BM_shot)->DenseRange(2, 8, 2);

void BM_layering(benchmark::State &state) {
    auto n = static_cast<uint32_t>(state.range(0));
    auto hc = build_alg2_resets(derive_params(n, n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(layer_circuit(hc.circuit));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(hc.circuit.instructions.size()));
}
BENCHMARK(BM_layering)->RangeMultiplier(4)->Range(4, 256);

void BM_emit_parse(benchmark::State &state) {
    auto n = static_cast<uint32_t>(state.range(0));
    auto c = build_alg2_tradeoff(derive_params(n, n)).circuit;
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse(emit(c)));
    }
}
BENCHMARK(BM_emit_parse)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
