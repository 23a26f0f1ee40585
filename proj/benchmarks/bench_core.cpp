// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "qrip/jacobi.hpp"
#include "qrip/rip.hpp"
#include "qrip/sampling.hpp"

namespace {

using namespace qrip;

void QuaternionProduct(benchmark::State& state) {
    RngStream rng(1);
    Quaternion p = sample_gaussian_quaternion(rng, 1.0);
    Quaternion q = sample_gaussian_quaternion(rng, 1.0);
    for (auto _ : state) {
        p = p * q;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(QuaternionProduct);

void GaussianMatrix(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    RngStream rng(2);
    for (auto _ : state) {
        auto phi = sample_gaussian_matrix(rng, m, 2 * m, {Field::Quaternion, 1.0 / m});
        benchmark::DoNotOptimize(phi);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * m * m));
}
BENCHMARK(GaussianMatrix)->RangeMultiplier(2)->Range(8, 64);

void Matvec(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream rng(3);
    const auto phi = sample_gaussian_matrix(rng, n, n, {Field::Quaternion, 1.0});
    QuatVector x(n, Field::Quaternion);
    for (std::size_t i = 0; i < n; ++i) x[i] = sample_gaussian_quaternion(rng, 1.0);
    for (auto _ : state) {
        auto y = matvec(phi, x);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(Matvec)->RangeMultiplier(2)->Range(8, 128);

void HermitianOpNorm(benchmark::State& state) {
    const auto s = static_cast<std::size_t>(state.range(0));
    RngStream rng(4);
    const auto phi = sample_gaussian_matrix(rng, 4 * s, s, {Field::Quaternion, 0.25 / s});
    QuatMatrix g = gram(phi);
    for (std::size_t i = 0; i < s; ++i) g.at(i, i) += Quaternion::real(-1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(op_norm_hermitian(g));
    }
}
BENCHMARK(HermitianOpNorm)->RangeMultiplier(2)->Range(2, 32);

void EmpiricalDeltaS(benchmark::State& state) {
    RngStream rng(5);
    const auto phi = sample_gaussian_matrix(rng, 32, 64, {Field::Quaternion, 1.0 / 32});
    for (auto _ : state) {
        auto est = empirical_delta_s(phi, 8, SupportSampling::random(
                                                 static_cast<std::size_t>(state.range(0))),
                                     1, RngStream(6));
        benchmark::DoNotOptimize(est);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(EmpiricalDeltaS)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
