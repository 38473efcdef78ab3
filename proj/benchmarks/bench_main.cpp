#include "schurweyl/projectors.hpp"
#include "schurweyl/spectral.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace schurweyl;

namespace {

const std::vector<std::vector<int>> kShapes{{2, 1}, {2, 2}, {3, 2, 1}, {2, 2, 2, 1}};

void BM_OrthogonalProjectorApply(benchmark::State &state) {
    const YoungDiagram y(kShapes[static_cast<std::size_t>(state.range(0))]);
    const int d = static_cast<int>(state.range(1));
    const auto p = orthogonal_projector(column_ordered(y));
    std::mt19937_64 rng(1);
    const auto x = TensorState::random(d, y.n_boxes(), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(p.apply(x));
    state.SetLabel(to_string(y) + " d=" + std::to_string(d));
}
BENCHMARK(BM_OrthogonalProjectorApply)->Args({0, 2})->Args({1, 3})->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_ClosedFormApply(benchmark::State &state) {
    const YoungDiagram y(kShapes[static_cast<std::size_t>(state.range(0))]);
    const int d = static_cast<int>(state.range(1));
    const auto p = closed_form_projector(column_ordered(y));
    std::mt19937_64 rng(1);
    const auto x = TensorState::random(d, y.n_boxes(), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(p.apply(x));
    state.SetLabel(to_string(y) + " d=" + std::to_string(d));
}
BENCHMARK(BM_ClosedFormApply)->Args({0, 2})->Args({1, 3})->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_SchmidtDecompose(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    const auto x = TensorState::random(3, n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(schmidt_decompose(x, n - 1));
}
BENCHMARK(BM_SchmidtDecompose)->DenseRange(4, 10, 3)->Unit(benchmark::kMicrosecond);

void BM_AlternatingAscent(benchmark::State &state) {
    const YoungDiagram y(kShapes[static_cast<std::size_t>(state.range(0))]);
    const SubspaceProjector p(irrep_block_basis(y, y.n_rows()));
    MaximizationConfig cfg;
    cfg.restarts = 4;
    cfg.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(max_lambda1_over_subspace(p, y.n_boxes() - 1, cfg));
    state.SetLabel(to_string(y));
}
BENCHMARK(BM_AlternatingAscent)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
