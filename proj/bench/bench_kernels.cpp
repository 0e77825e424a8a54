#include <benchmark/benchmark.h>

#include <cmath>

#include "eo/catalan/counts.hpp"
#include "eo/catalan/free_energy.hpp"
#include "eo/hurwitz/counts.hpp"
#include "eo/hurwitz/free_energy.hpp"

using eo::parallel::Exec;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_CatalanTable(benchmark::State& state) {
    for (auto _ : state) {
        eo::catalan::CatalanTable t(2, 3, static_cast<int>(state.range(1)), mode(state));
        benchmark::DoNotOptimize(t.entries().size());
    }
}

void BM_HurwitzTable(benchmark::State& state) {
    for (auto _ : state) {
        eo::hurwitz::HurwitzTable t(2, 3, static_cast<int>(state.range(1)), mode(state));
        benchmark::DoNotOptimize(t.entries().size());
    }
}

void BM_LaplaceCatalan(benchmark::State& state) {
    std::vector<double> x{10, 11, 12};
    eo::catalan::laplace_sum_C(1, 3, x, static_cast<int>(state.range(1)), Exec::serial);  // warm the memo
    for (auto _ : state) benchmark::DoNotOptimize(eo::catalan::laplace_sum_C(1, 3, x, static_cast<int>(state.range(1)), mode(state)));
}

void BM_LaplaceHurwitz(benchmark::State& state) {
    std::vector<double> x{std::exp(-3.0), std::exp(-3.1), std::exp(-3.2)};
    eo::hurwitz::laplace_sum_H(1, 3, x, static_cast<int>(state.range(1)), Exec::serial);
    for (auto _ : state) benchmark::DoNotOptimize(eo::hurwitz::laplace_sum_H(1, 3, x, static_cast<int>(state.range(1)), mode(state)));
}

}  // namespace

// Args: {0 = serial reference, 1 = OpenMP}, size.
BENCHMARK(BM_CatalanTable)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HurwitzTable)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplaceCatalan)->ArgsProduct({{0, 1}, {30, 40}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplaceHurwitz)->ArgsProduct({{0, 1}, {20, 30}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
