/**
 * Microbenchmarks for the bound machinery on sizes above desk scale. Inputs
 * are seeded, so numbers are comparable across runs and machines modulo
 * hardware.
 */

#include <cstdint>
#include <set>

#include <benchmark/benchmark.h>

#include "tempnet/cactus.hpp"
#include "tempnet/cdg.hpp"
#include "tempnet/mdg.hpp"
#include "tempnet/model.hpp"
#include "tempnet/oracle.hpp"
#include "tempnet/rng.hpp"

namespace {

tempnet::SparsityPattern sampled_pattern(tempnet::Rng& rng, int rows, int cols, double density) {
    tempnet::SparsityPattern p(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.unit() < density)
                p.insert(r, c);
    return p;
}

tempnet::TemporalNetwork sampled_network(std::uint64_t seed, int n, int N, int m,
                                         double density_a, double density_b) {
    tempnet::Rng rng(seed);
    tempnet::TemporalNetwork net;
    net.n = n;
    for (int i = 0; i < N; ++i) {
        tempnet::StructuredPair pair;
        pair.a = sampled_pattern(rng, n, n, density_a);
        pair.b = sampled_pattern(rng, n, m, density_b);
        if (pair.b.empty())
            pair.b.insert(0, 0);
        net.pairs.push_back(pair);
    }
    return net;
}

void BM_CdgUpperBound(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const tempnet::TemporalNetwork net = sampled_network(11, n, 3, 2, 0.15, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(tempnet::cdg_upper_bound(net).bound);
}
BENCHMARK(BM_CdgUpperBound)->Arg(8)->Arg(16)->Arg(24);

void BM_MdgUpperBound(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const tempnet::TemporalNetwork net = sampled_network(12, n, 3, 2, 0.2, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(tempnet::mdg_upper_bound(net).bound);
}
BENCHMARK(BM_MdgUpperBound)->Arg(4)->Arg(6)->Arg(8);

void BM_OracleOmegaBarTrial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const tempnet::TemporalNetwork net = sampled_network(13, n, 3, 2, 0.25, 0.5);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(tempnet::oracle_gdim_omegabar(net, 1, ++seed).value);
}
BENCHMARK(BM_OracleOmegaBarTrial)->Arg(4)->Arg(6)->Arg(8);

void BM_MaxCactusCover(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    tempnet::Rng rng(14);
    tempnet::StructuredPair pair;
    pair.a = sampled_pattern(rng, n, n, 0.12);
    pair.b = sampled_pattern(rng, n, 3, 0.4);
    std::set<int> all;
    for (int j = 0; j < n; ++j)
        all.insert(j);
    for (auto _ : state)
        benchmark::DoNotOptimize(tempnet::max_cactus_cover(pair, all).covered.size());
}
BENCHMARK(BM_MaxCactusCover)->Arg(10)->Arg(20)->Arg(30);

void BM_TemporalCactusHeuristic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const tempnet::TemporalNetwork net = sampled_network(15, n, 2, 2, 0.2, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(tempnet::temporal_cactus_lower_bound(net, 4, 42).bound);
}
BENCHMARK(BM_TemporalCactusHeuristic)->Arg(4)->Arg(6)->Arg(8);

void BM_GreedyUnion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const tempnet::TemporalNetwork net = sampled_network(16, n, 4, 2, 0.15, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(tempnet::greedy_union_lower_bound(net).bound);
}
BENCHMARK(BM_GreedyUnion)->Arg(10)->Arg(20)->Arg(30);

} // namespace

BENCHMARK_MAIN();
