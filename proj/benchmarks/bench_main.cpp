#include <benchmark/benchmark.h>

#include "typecount/archweyl.hpp"
#include "typecount/greenchar.hpp"
#include "typecount/projcensus.hpp"

using namespace typecount;

namespace {

Mat companion_x2x1(const TruncRing& R) {
    Mat g = Mat::sized(R, 2);
    g.at(0, 1) = R.neg(R.one());
    g.at(1, 0) = R.one();
    g.at(1, 1) = R.neg(R.one());
    return g;
}

void BM_CensusBrute(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const TowerField tf(3, 2);
    const TruncRing R(tf, RingKind::Base, k);
    const Mat g = companion_x2x1(R);
    for (auto _ : state) {
        auto rep = census(R, g, CensusModel::Unramified, tf, k, default_budget(), 1);
        benchmark::DoNotOptimize(rep.count);
    }
    state.SetComplexityN(static_cast<int64_t>(xk_size(CensusModel::Unramified, tf, k)));
}
BENCHMARK(BM_CensusBrute)->DenseRange(1, 3)->Complexity();

void BM_CensusFormula(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const TowerField tf(3, 2);
    const TruncRing R(tf, RingKind::Base, k);
    const Mat g = companion_x2x1(R);
    for (auto _ : state) {
        auto rep = census_formula(R, g, CensusModel::Unramified, tf, k);
        benchmark::DoNotOptimize(rep.count);
    }
}
BENCHMARK(BM_CensusFormula)->DenseRange(1, 4);

void BM_ConjClasses(benchmark::State& state) {
    const TowerField tf(static_cast<std::uint64_t>(state.range(0)), 2);
    for (auto _ : state) {
        auto classes = conj_classes(tf);
        benchmark::DoNotOptimize(classes.size());
    }
}
BENCHMARK(BM_ConjClasses)->Arg(3)->Arg(5);

void BM_GreenTable(benchmark::State& state) {
    const TowerField tf(3, 2);
    const auto classes = conj_classes(tf);
    const auto orbits = regular_orbits(tf);
    for (auto _ : state) {
        for (auto k : orbits) {
            auto f = green_class_function({k}, classes, tf);
            benchmark::DoNotOptimize(f.size());
        }
    }
}
BENCHMARK(BM_GreenTable);

void BM_SchurTrace(benchmark::State& state) {
    const long long gap = state.range(0);
    const std::vector<std::complex<double>> x = {{0.6, 0.8}, {-0.8, 0.6}, {0.0, 1.0}};
    const Weight lam{{gap, gap / 2, 0}};
    for (auto _ : state) {
        auto v = schur_trace(lam, x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SchurTrace)->Arg(10)->Arg(40);

} // namespace

BENCHMARK_MAIN();
