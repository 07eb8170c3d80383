// Microbenchmarks for the pairwise and enumeration kernels: f-sum inversion
// counting vs the definitional double loop, whole-family S computation, and
// the containment searches that back the extremal enumerations.
#include <benchmark/benchmark.h>

#include <random>

#include "ordex/audit.hpp"
#include "ordex/constructions.hpp"
#include "ordex/edge_ordered.hpp"
#include "ordex/zo_matrix.hpp"

using namespace ordex;

namespace {

LinearOrder random_order(std::mt19937_64& rng, Symbol universe, int len) {
    std::vector<Symbol> pool(universe);
    for (Symbol a = 0; a < universe; ++a) pool[a] = a;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(len);
    return LinearOrder(pool);
}

long long naive_pair_f_sum(const LinearOrder& b1, const LinearOrder& b2) {
    long long s = 0;
    for (Symbol a : b1.seq)
        for (Symbol b : b1.seq) {
            if (a == b) continue;
            const int p2a = b2.position(a);
            const int p2b = b2.position(b);
            if (p2a < 0 || p2b < 0) continue;
            const int f1 = b1.position(a) < b1.position(b) ? 1 : -1;
            const int f2 = p2a < p2b ? 1 : -1;
            s += f1 * f2;
        }
    return s;
}

}  // namespace

static void BM_PairFSum_Inversion(benchmark::State& st) {
    std::mt19937_64 rng(1);
    const int len = static_cast<int>(st.range(0));
    const LinearOrder b1 = random_order(rng, 2 * len, len);
    const LinearOrder b2 = random_order(rng, 2 * len, len);
    for (auto _ : st) benchmark::DoNotOptimize(pair_f_sum(b1, b2));
    st.SetItemsProcessed(st.iterations() * len);
}
BENCHMARK(BM_PairFSum_Inversion)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

static void BM_PairFSum_Naive(benchmark::State& st) {
    std::mt19937_64 rng(1);
    const int len = static_cast<int>(st.range(0));
    const LinearOrder b1 = random_order(rng, 2 * len, len);
    const LinearOrder b2 = random_order(rng, 2 * len, len);
    for (auto _ : st) benchmark::DoNotOptimize(naive_pair_f_sum(b1, b2));
    st.SetItemsProcessed(st.iterations() * len);
}
BENCHMARK(BM_PairFSum_Naive)->Arg(16)->Arg(64)->Arg(256);

static void BM_ComputeS_Polarity(benchmark::State& st) {
    const OrderFamily f = family_from_polarity(static_cast<int>(st.range(0)), 1);
    for (auto _ : st) benchmark::DoNotOptimize(compute_S(f));
}
BENCHMARK(BM_ComputeS_Polarity)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

static void BM_ComputeS_Polarity_Threads(benchmark::State& st) {
    const OrderFamily f = family_from_polarity(13, 1);
    for (auto _ : st) benchmark::DoNotOptimize(compute_S(f, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ComputeS_Polarity_Threads)->Arg(1)->Arg(2)->Arg(4);

static void BM_FullAudit_Polarity(benchmark::State& st) {
    const OrderFamily f = family_from_polarity(static_cast<int>(st.range(0)), 1);
    for (auto _ : st) benchmark::DoNotOptimize(full_audit(f).all_unconditional_pass());
}
BENCHMARK(BM_FullAudit_Polarity)->Arg(5)->Arg(7)->Arg(11);

static void BM_EoContains_C4(benchmark::State& st) {
    std::mt19937_64 rng(3);
    std::vector<std::pair<int, int>> pairs;
    const int n = 8;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(st.range(0)));
    const EdgeOrderedGraph host = make_edge_ordered(n, pairs);
    const EdgeOrderedGraph pat = c4_1243();
    for (auto _ : st) benchmark::DoNotOptimize(contains(host, pat).has_value());
}
BENCHMARK(BM_EoContains_C4)->Arg(8)->Arg(16)->Arg(28);

static void BM_FindC4Fast(benchmark::State& st) {
    std::mt19937_64 rng(3);
    std::vector<std::pair<int, int>> pairs;
    const int n = 8;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(st.range(0)));
    const EdgeOrderedGraph host = make_edge_ordered(n, pairs);
    for (auto _ : st) benchmark::DoNotOptimize(find_c4_fast(host).has_value());
}
BENCHMARK(BM_FindC4Fast)->Arg(8)->Arg(16)->Arg(28);

static void BM_ExOrdered(benchmark::State& st) {
    const EdgeOrderedGraph pat = c4_1243();
    for (auto _ : st)
        benchmark::DoNotOptimize(brute_force_ex_ordered(static_cast<int>(st.range(0)), pat));
}
BENCHMARK(BM_ExOrdered)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MxEx(benchmark::State& st) {
    const ZeroOneMatrix pat = s_t(2);
    for (auto _ : st)
        benchmark::DoNotOptimize(brute_force_Ex(static_cast<int>(st.range(0)), pat));
}
BENCHMARK(BM_MxEx)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
