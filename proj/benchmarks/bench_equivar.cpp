// Copyright 2026 The equivar Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "equivar/experiments.hpp"

using namespace equivar;

namespace {

void BM_Estimate(benchmark::State &state, const char *name) {
    const auto spec = make_experiment(name);
    Rng rng = make_stream(1, Stream::Data);
    const auto points = sample_data(spec, 64, rng);
    const auto theta = initial_parameters(spec.circuit().num_params, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate(spec.circuit(), theta, points[i++ % points.size()]));
    }
}
BENCHMARK_CAPTURE(BM_Estimate, line2x2, "line2x2");
BENCHMARK_CAPTURE(BM_Estimate, d4, "d4");
BENCHMARK_CAPTURE(BM_Estimate, s6, "s6");

void BM_Expectation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    StateVector psi = init_state(n);
    for (std::size_t q = 0; q < n; ++q) {
        psi.apply(gates::RY(0.3 + 0.1 * static_cast<double>(q)), {q});
    }
    const PauliObservable obs(std::string(n, 'Z'));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation(psi, obs));
    }
}
BENCHMARK(BM_Expectation)->Arg(4)->Arg(6)->Arg(8);

void BM_Twirl(benchmark::State &state, const char *name) {
    const auto spec = make_experiment(name);
    const std::string word(spec.circuit().num_qubits, 'X');
    const auto x = pauli_matrix("Z" + word.substr(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(twirl(spec.w_rep, x));
    }
}
BENCHMARK_CAPTURE(BM_Twirl, d4, "d4");
BENCHMARK_CAPTURE(BM_Twirl, s6, "s6")->Unit(benchmark::kMillisecond);

void BM_SpsaStep(benchmark::State &state, const char *name) {
    const auto spec = make_experiment(name);
    Rng data = make_stream(1, Stream::Data);
    Rng rng = make_stream(1, Stream::Spsa);
    std::vector<LossSample> batch;
    for (const auto &x : sample_data(spec, 10, data)) {
        batch.push_back({GroupElement{{spec.task.generators.front()}}, x});
    }
    const auto theta = initial_parameters(spec.circuit().num_params, 1);
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            spsa_gradient(spec.circuit(), theta, batch, k++, rng, spec.task.action));
    }
}
BENCHMARK_CAPTURE(BM_SpsaStep, c2, "c2");
BENCHMARK_CAPTURE(BM_SpsaStep, s6, "s6");

} // namespace

BENCHMARK_MAIN();
