#include <benchmark/benchmark.h>

#include "flagfold/complex.hpp"
#include "flagfold/fixtures.hpp"
#include "flagfold/graph.hpp"
#include "flagfold/homology.hpp"
#include "flagfold/reduction.hpp"

using namespace flagfold;

namespace {

void bm_dismantle(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(dismantle(g));
}
BENCHMARK(bm_dismantle)->Arg(16)->Arg(32)->Arg(64);

void bm_clique_complex(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(clique_complex(g));
}
BENCHMARK(bm_clique_complex)->Arg(12)->Arg(20)->Arg(28);

void bm_canonical_hash(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_hash(g));
}
BENCHMARK(bm_canonical_hash)->Arg(16)->Arg(64);

void bm_homology_clique(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 5);
    SimplicialComplex k = clique_complex(g);
    for (auto _ : state) benchmark::DoNotOptimize(homology(k));
}
BENCHMARK(bm_homology_clique)->Arg(10)->Arg(14);

void bm_homology_torus(benchmark::State& state) {
    SimplicialComplex k = fixtures::torus_7();
    for (auto _ : state) benchmark::DoNotOptimize(homology(k, false));
}
BENCHMARK(bm_homology_torus);

void bm_barycentric(benchmark::State& state) {
    SimplicialComplex k = fixtures::rp2_6();
    for (auto _ : state) benchmark::DoNotOptimize(barycentric(k));
}
BENCHMARK(bm_barycentric);

void bm_certify(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 13);
    for (auto _ : state) benchmark::DoNotOptimize(certify_contractible(g, Budget{1000, 6}));
}
BENCHMARK(bm_certify)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
