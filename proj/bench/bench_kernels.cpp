#include <benchmark/benchmark.h>

#include "spectramark/generators.hpp"
#include "spectramark/kernels.hpp"
#include "spectramark/spectral.hpp"

using namespace spectramark;

namespace {

struct Input {
    Graph g;
    std::vector<double> lambdas;
};

Input make_input(std::size_t n) {
    Input in{connected_erdos_renyi(n, 0.3, 2024), {}};
    in.lambdas = decompose(in.g).eigenvalues;
    return in;
}

template <class F>
void run_shift_determinants(benchmark::State& state, F kernel) {
    const Input in = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernel(in.g, in.lambdas));
    state.SetComplexityN(state.range(0));
}

void BM_ShiftDeterminants_Serial(benchmark::State& state) {
    run_shift_determinants(state, [](const Graph& g, const std::vector<double>& l) {
        return serial::node_deleted_shift_determinants(g, l);
    });
}

void BM_ShiftDeterminants_Parallel(benchmark::State& state) {
    run_shift_determinants(state, [](const Graph& g, const std::vector<double>& l) {
        return parallel::node_deleted_shift_determinants(g, l);
    });
}

void BM_PairSums_Serial(benchmark::State& state) {
    const Input in = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::pair_deletion_sums(in.g, in.lambdas[1]));
}

void BM_PairSums_Parallel(benchmark::State& state) {
    const Input in = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::pair_deletion_sums(in.g, in.lambdas[1]));
}

void BM_DeletedCharPolys_Serial(benchmark::State& state) {
    const Input in = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::node_deleted_char_polys(in.g));
}

void BM_DeletedCharPolys_Parallel(benchmark::State& state) {
    const Input in = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::node_deleted_char_polys(in.g));
}

} // namespace

BENCHMARK(BM_ShiftDeterminants_Serial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShiftDeterminants_Parallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PairSums_Serial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PairSums_Parallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DeletedCharPolys_Serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DeletedCharPolys_Parallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();


BENCHMARK_MAIN();
