// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: small complex SVD, the engineered
// output density, one Monte Carlo bound sample and Property (A) search.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "prelog/channel.hpp"
#include "prelog/output_density.hpp"
#include "prelog/property_a.hpp"
#include "prelog/rng.hpp"
#include "prelog/svd.hpp"

using namespace prelog;

namespace {

void BM_GaussianMatrix8x8(benchmark::State &state) {
    RngStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_gaussian_matrix(8, 8, rng));
    }
}
BENCHMARK(BM_GaussianMatrix8x8);

void BM_Svd(benchmark::State &state) {
    const std::size_t rows = static_cast<std::size_t>(state.range(0));
    const std::size_t cols = static_cast<std::size_t>(state.range(1));
    RngStream rng(2, 0);
    const ComplexMatrix a = sample_gaussian_matrix(rows, cols, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(svd(a));
    }
}
BENCHMARK(BM_Svd)->Args({2, 2})->Args({4, 3})->Args({8, 8})->Args({16, 16});

void BM_LogROutput3x4(benchmark::State &state) {
    OutputDensityParams params;
    params.m = 3;
    params.n = 4;
    params.rho = 1e4;
    RngStream rng(3, 0);
    const ComplexMatrix y = sample_gaussian_matrix(3, 4, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_r_output(y, params));
    }
}
BENCHMARK(BM_LogROutput3x4);

void BM_DualityBlockSample(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    OutputDensityParams params;
    params.m = m;
    params.n = n;
    params.rho = 1e5;
    RngStream rng(4, 0);
    for (auto _ : state) {
        const std::vector<cplx> x =
            sample_power_input(static_cast<std::size_t>(n), params.rho, InputKind::sphere, rng);
        const ComplexMatrix s = sample_gaussian_matrix(static_cast<std::size_t>(m), 1, rng);
        ComplexMatrix y =
            sample_gaussian_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), rng);
        for (int a = 0; a < m; ++a) {
            for (int k = 0; k < n; ++k) {
                y(static_cast<std::size_t>(a), static_cast<std::size_t>(k)) +=
                    s(static_cast<std::size_t>(a), 0) * x[static_cast<std::size_t>(k)];
            }
        }
        benchmark::DoNotOptimize(log_r_output(y, params));
    }
}
BENCHMARK(BM_DualityBlockSample)->Args({2, 2})->Args({3, 4});

void BM_PropertyA(benchmark::State &state) {
    const double angles[] = {0.05, 0.25, 0.45, 0.65, 0.85, 1.05};
    const CorrelationRoot root = trig_root(6, angles);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_property_a(root, 2));
    }
}
BENCHMARK(BM_PropertyA);

} // namespace

BENCHMARK_MAIN();
