#include <benchmark/benchmark.h>

#include "quandle/homology.hpp"
#include "quandle/invariants.hpp"

using namespace qdl;

static void BM_BoundaryMatrix(benchmark::State& state) {
    auto q = make_dihedral(static_cast<int>(state.range(0)));
    ComplexSpec spec{&q, Theory::R, false, 0, std::nullopt};
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto m = boundary_matrix(spec, n);
        benchmark::DoNotOptimize(m.col);
    }
}
BENCHMARK(BM_BoundaryMatrix)->Args({5, 3})->Args({7, 3})->Args({9, 3})->Args({5, 4});

static void BM_Snf(benchmark::State& state) {
    auto q = make_dihedral(static_cast<int>(state.range(0)));
    ComplexSpec spec{&q, Theory::Q, false, 0, std::nullopt};
    auto m = boundary_matrix(spec, static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto d = snf_diagonal(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Snf)->Args({5, 3})->Args({7, 3})->Args({9, 3});

static void BM_Homology(benchmark::State& state) {
    auto q = make_dihedral(static_cast<int>(state.range(0)));
    ComplexSpec spec{&q, Theory::Q, false, 0, std::nullopt};
    for (auto _ : state) {
        auto h = homology(spec, static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(h.free_rank);
    }
}
BENCHMARK(BM_Homology)->Args({3, 3})->Args({5, 3})->Args({7, 2});

static void BM_Colorings(benchmark::State& state) {
    auto d = OrientedDiagram::parse_pd("X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)");
    auto q = make_dihedral(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cols = enumerate_colorings(d, q);
        benchmark::DoNotOptimize(cols.size());
    }
}
BENCHMARK(BM_Colorings)->Arg(3)->Arg(5)->Arg(9);

static void BM_ShadowStateSum(benchmark::State& state) {
    auto d = OrientedDiagram::parse_pd("X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)");
    auto q = make_dihedral(3);
    Cocycle f;
    f.degree = 3;
    f.modulus = 3;
    for (const auto& t : {std::vector<int>{0, 1, 2}, {0, 2, 1}, {1, 0, 1},
                          {1, 0, 2}, {2, 0, 1}, {2, 0, 2}})
        f.values[t] = 1;
    StateSumOptions opt;
    opt.shadow = true;
    for (auto _ : state) {
        auto s = state_sum(d, q, f, opt);
        benchmark::DoNotOptimize(s.histogram);
    }
}
BENCHMARK(BM_ShadowStateSum);

BENCHMARK_MAIN();
