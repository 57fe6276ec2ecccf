// Enumeration throughput: all-path oracle vs the two pruned heuristics
// on seeded power-law graphs, across propagation lengths.

#include <benchmark/benchmark.h>

#include "pathtrust/enumerate.hpp"
#include "pathtrust/generate.hpp"
#include "pathtrust/inference.hpp"
#include "pathtrust/weights.hpp"

namespace pt = pathtrust;

namespace {

const pt::TrustGraph& test_graph() {
    static pt::TrustGraph g = pt::generate_powerlaw(300, 3, 7);
    return g;
}

void BM_EnumerateAll(benchmark::State& state) {
    const auto& g = test_graph();
    int lmax = static_cast<int>(state.range(0));
    std::size_t paths = 0;
    for (auto _ : state) {
        auto index = pt::enumerate_all(g, lmax);
        paths = index.path_count();
        benchmark::DoNotOptimize(index);
    }
    state.counters["paths"] = static_cast<double>(paths);
}

void BM_EnumerateH1(benchmark::State& state) {
    const auto& g = test_graph();
    int lmax = static_cast<int>(state.range(0));
    auto theta = pt::indegree_weights(g);
    pt::EnumConfig cfg;
    cfg.lmax = lmax;
    cfg.method = pt::Method::H1;
    cfg.cth = 1.0;
    std::size_t paths = 0;
    for (auto _ : state) {
        auto index = pt::enumerate_h1(g, theta, cfg);
        paths = index.path_count();
        benchmark::DoNotOptimize(index);
    }
    state.counters["paths"] = static_cast<double>(paths);
}

void BM_EnumerateH2(benchmark::State& state) {
    const auto& g = test_graph();
    int lmax = static_cast<int>(state.range(0));
    auto theta = pt::indegree_weights(g);
    pt::EnumConfig cfg;
    cfg.lmax = lmax;
    cfg.method = pt::Method::H2;
    cfg.cth = 1.0;
    std::size_t paths = 0;
    for (auto _ : state) {
        auto index = pt::enumerate_h2(g, theta, cfg);
        paths = index.path_count();
        benchmark::DoNotOptimize(index);
    }
    state.counters["paths"] = static_cast<double>(paths);
}

void BM_BuildInferred(benchmark::State& state) {
    const auto& g = test_graph();
    int lmax = static_cast<int>(state.range(0));
    auto index = pt::enumerate_all(g, lmax);
    auto delta = pt::delta_weights(g, 1.0 / lmax, 0.0);
    pt::ScoringConfig sc{lmax, pt::BenefitKind::DeltaSum, delta};
    for (auto _ : state) {
        auto inferred = pt::build_inferred(g, index, sc);
        benchmark::DoNotOptimize(inferred);
    }
}

}  // namespace

BENCHMARK(BM_EnumerateAll)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateH1)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateH2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildInferred)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
