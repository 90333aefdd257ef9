#include "degmom/estimator.hpp"
#include "degmom/generators.hpp"
#include "degmom/moments.hpp"
#include "degmom/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace degmom;

const Graph& pa_graph() {
    static const Graph g =
        generate({Family::preferential_attachment, {{"n", 100000}, {"m0", 3}}, 1}).graph;
    return g;
}

void BM_OracleDegreeQuery(benchmark::State& state) {
    const Graph& g = pa_graph();
    QueryOracle o(g, 1u);
    VertexId v = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(o.degree_of(v));
        v = (v + 7919) % g.vertex_count();
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OracleDegreeQuery);

void BM_OracleRandomNeighbor(benchmark::State& state) {
    const Graph& g = pa_graph();
    QueryOracle o(g, 2u);
    for (auto _ : state) {
        const VertexId v = o.random_vertex();
        if (g.degree(v) > 0) benchmark::DoNotOptimize(o.random_neighbor(v));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OracleRandomNeighbor);

void BM_EstimateOnce(benchmark::State& state) {
    const Graph& g = pa_graph();
    QueryOracle o(g, 3u);
    const auto r = static_cast<std::uint64_t>(state.range(0));
    const auto q = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_once(o, r, q, 2));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * (r + q)));
}
BENCHMARK(BM_EstimateOnce)->Args({1000, 10000})->Args({10000, 100000});

void BM_RSampleDraw(benchmark::State& state) {
    const Graph& g = pa_graph();
    QueryOracle o(g, 4u);
    const RSample sample = RSample::collect(o, 20000);
    Rng rng(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample.draw_index(rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RSampleDraw);

void BM_CoreNumber(benchmark::State& state) {
    const Graph& g = pa_graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(core_number(g));
    }
}
BENCHMARK(BM_CoreNumber);

void BM_WeightProfile(benchmark::State& state) {
    const Graph& g = pa_graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight_profile(g, 2).total);
    }
}
BENCHMARK(BM_WeightProfile);

}  // namespace

BENCHMARK_MAIN();
