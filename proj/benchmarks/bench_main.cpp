#include <benchmark/benchmark.h>

#include "swapkit/chain.hpp"
#include "swapkit/hadamard.hpp"
#include "swapkit/pc_class.hpp"
#include "swapkit/swap.hpp"

using namespace swapkit;

static void BM_census(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(census(d, 1));
    }
}
BENCHMARK(BM_census)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_census_threaded(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(census(6, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_census_threaded)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_swap(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const MeasurementBasis basis = gour_basis(fourier(d).to_unitary());
    Rng rng(1);
    const DiagonalSpectrum a = random_full_rank_spectrum(d, rng);
    const DiagonalSpectrum b = random_full_rank_spectrum(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(swap(a, b, basis));
    }
}
BENCHMARK(BM_swap)->DenseRange(2, 6, 1);

static void BM_oracle_swap(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const MeasurementBasis basis = gour_basis(fourier(d).to_unitary());
    Rng rng(2);
    const DiagonalSpectrum a = random_full_rank_spectrum(d, rng);
    const DiagonalSpectrum b = random_full_rank_spectrum(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_swap(a, b, basis));
    }
}
BENCHMARK(BM_oracle_swap)->DenseRange(2, 4, 1);

static void BM_fuse(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Rng rng(3);
    const DiagonalSpectrum j = random_full_rank_spectrum(d, rng);
    const DiagonalSpectrum k = random_full_rank_spectrum(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fuse(j, k));
    }
}
BENCHMARK(BM_fuse)->DenseRange(2, 6, 1);

static void BM_pc_equivalent(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const ComplexMatrix f = fourier(d).to_unitary();
    Rng rng(4);
    std::vector<double> lp(static_cast<std::size_t>(d)), rp(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        lp[static_cast<std::size_t>(k)] = rng.uniform();
        rp[static_cast<std::size_t>(k)] = rng.uniform();
    }
    const ComplexMatrix dressed = dress(DiagonalUnitary(lp), f, DiagonalUnitary(rp));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pc_equivalent(f, dressed));
    }
}
BENCHMARK(BM_pc_equivalent)->DenseRange(2, 6, 1);

BENCHMARK_MAIN();
