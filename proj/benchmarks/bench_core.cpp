// Copyright 2026 The qwitness authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Microbenchmarks for the hot paths of a witness scan: dense kernels,
// state preparation, and the per-grid-point report.

#include <numbers>

#include <benchmark/benchmark.h>

#include "qwitness/models.hpp"
#include "qwitness/random.hpp"
#include "qwitness/witness.hpp"

using namespace qwitness;

namespace {

ComplexMatrix fixed_hermitian(Index dim) {
    Rng rng = sub_rng(1234, static_cast<std::uint64_t>(dim));
    return random_hermitian(dim, rng);
}

void BM_TensorProduct(benchmark::State& state) {
    const Index dim = state.range(0);
    const ComplexMatrix a = fixed_hermitian(dim);
    const ComplexMatrix b = fixed_hermitian(dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor_product(a, b));
    }
}
BENCHMARK(BM_TensorProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_PartialTrace(benchmark::State& state) {
    const Index d = state.range(0);
    const ComplexMatrix m = fixed_hermitian(d * d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_out_environment(m, d, d));
    }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(8);

void BM_HermitianEig(benchmark::State& state) {
    const ComplexMatrix a = fixed_hermitian(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(a));
    }
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(16)->Arg(64);

void BM_TraceNorm(benchmark::State& state) {
    const ComplexMatrix a = fixed_hermitian(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_norm(a));
    }
}
BENCHMARK(BM_TraceNorm)->Arg(4)->Arg(16);

void BM_ExpmSkew(benchmark::State& state) {
    const ComplexMatrix h = fixed_hermitian(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expm_skew(h, 0.37));
    }
}
BENCHMARK(BM_ExpmSkew)->Arg(4)->Arg(16);

void BM_Propagator(benchmark::State& state) {
    const HamiltonianSchedule sched(
        2, 2, {{0.0, 1.0, fixed_hermitian(4)}, {1.0, 2.0, fixed_hermitian(4)}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagator(sched, 0.2, 1.8));
    }
}
BENCHMARK(BM_Propagator);

void BM_PreparePair(benchmark::State& state) {
    const ModelInstance m1 = model_dephasing(1.0, 0.5, {0.8, 0, 0.3}, {0, 0, 0.6});
    const PreparationProcedure p1 = PreparationProcedure::rotation({0, 1, 0}, 0.6);
    const PreparationProcedure p2 = PreparationProcedure::rotation({1, 1, 1}, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prepare_pair(p1, p2, m1.rho_se0));
    }
}
BENCHMARK(BM_PreparePair);

void BM_InequalityReport(benchmark::State& state) {
    const ModelInstance m1 = model_dephasing(1.0, 0.5, {0.8, 0, 0.3}, {0, 0, 0.6});
    const PreparedPair pair =
        prepare_pair(PreparationProcedure::rotation({0, 1, 0}, 0.6),
                     PreparationProcedure::rotation({1, 1, 1}, 1.1), m1.rho_se0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inequality_report(pair, m1.sched, 0.0, 1e-5));
    }
}
BENCHMARK(BM_InequalityReport);

void BM_TimeScan(benchmark::State& state) {
    const ModelInstance m1 = model_dephasing(1.0, 0.5, {0.8, 0, 0.3}, {0, 0, 0.6});
    const PreparationProcedure p1 = PreparationProcedure::rotation({0, 1, 0}, 0.6);
    const PreparationProcedure p2 = PreparationProcedure::rotation({1, 1, 1}, 1.1);
    std::vector<double> grid(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = 2 * std::numbers::pi * static_cast<double>(i) /
                  static_cast<double>(grid.size() - 1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(time_scan(m1.rho_se0, m1.sched, p1, p2, grid, 1e-5));
    }
}
BENCHMARK(BM_TimeScan)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ChoiCheck(benchmark::State& state) {
    Rng rng = sub_rng(77, 0);
    const DensityMatrix env = random_density(2, 2, rng);
    const HamiltonianSchedule sched = HamiltonianSchedule::constant(2, 2, fixed_hermitian(4));
    const Propagator u = propagator(sched, 0.0, 0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cp_check(env, u));
    }
}
BENCHMARK(BM_ChoiCheck);

}  // namespace

BENCHMARK_MAIN();
