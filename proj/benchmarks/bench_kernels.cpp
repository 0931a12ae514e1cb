#include <benchmark/benchmark.h>

#include "spreadlab/degeneracy.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/isomorphism.hpp"
#include "spreadlab/spread.hpp"
#include "spreadlab/threshold.hpp"

using namespace spreadlab;

namespace {

void BM_EnumerateEmbeddings(benchmark::State& state) {
    Hypergraph pattern = cycle_power((int)state.range(0), 2);
    Hypergraph host = gnp((int)state.range(0), 2, 0.8, 7);
    for (auto _ : state) {
        auto en = enumerate_embeddings(pattern, host);
        benchmark::DoNotOptimize(en.embeddings.size());
    }
}
BENCHMARK(BM_EnumerateEmbeddings)->Arg(8)->Arg(10);

void BM_AlphaStar(benchmark::State& state) {
    Hypergraph g = cycle_power((int)state.range(0), 2);
    for (auto _ : state) {
        auto rep = alpha_star(g, Rational(2), Rational(1), 2);
        benchmark::DoNotOptimize(rep.alpha_star.num());
    }
}
BENCHMARK(BM_AlphaStar)->Arg(14)->Arg(18);

void BM_BoundaryAudit(benchmark::State& state) {
    Hypergraph g = locally_sparse_regular((int)state.range(0), 3);
    for (auto _ : state) {
        auto rep = locally_sparse_audit(g, 3, Rational(1, 2));
        benchmark::DoNotOptimize(rep.min_boundary);
    }
}
BENCHMARK(BM_BoundaryAudit)->Arg(18)->Arg(24);

void BM_BlossomMatching(benchmark::State& state) {
    Hypergraph g = gnp((int)state.range(0), 2, 4.0 / state.range(0), 11);
    for (auto _ : state) benchmark::DoNotOptimize(max_matching_size(g));
}
BENCHMARK(BM_BlossomMatching)->Arg(64)->Arg(128);

void BM_AutCount(benchmark::State& state) {
    Hypergraph g = cycle_power((int)state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(aut_count(g).count);
}
BENCHMARK(BM_AutCount)->Arg(10)->Arg(12);

void BM_EdgeSpreadAudit(benchmark::State& state) {
    auto matching = [](int n) {
        std::vector<std::vector<int>> edges;
        for (int i = 0; i + 1 < n; i += 2) edges.push_back({i, i + 1});
        return Hypergraph::from_edges(2, n, edges);
    };
    auto complete = [](int n) {
        std::vector<std::vector<int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
        return Hypergraph::from_edges(2, n, edges);
    };
    int n = (int)state.range(0);
    auto copies = pushforward_copies(uniform_embedding_distribution(matching(n), complete(n)));
    for (auto _ : state) {
        auto rep = edge_spread_audit(copies, n / 2);
        benchmark::DoNotOptimize(rep.achieved_q);
    }
}
BENCHMARK(BM_EdgeSpreadAudit)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
