#include "stanley/independence.hpp"
#include "stanley/io.hpp"
#include "stanley/qdepth.hpp"
#include "stanley/reference_instances.hpp"
#include "stanley/sdepth.hpp"

#include <benchmark/benchmark.h>

using namespace stanley;

static void BM_QdepthMaximalIdeal(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const MonomialIdeal m = MonomialIdeal::maximal(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(qdepth(poset_of_ideal(m)).value);
}
BENCHMARK(BM_QdepthMaximalIdeal)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_SdepthMaximalIdeal(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const SubsetFamily P = poset_of_ideal(MonomialIdeal::maximal(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(sdepth(P).value);
}
BENCHMARK(BM_SdepthMaximalIdeal)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Duval16QuotientPoset(benchmark::State& state)
{
    const MonomialIdeal I = parse_ideal(reference::duval16_ideal).ideal;
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_vector(poset_of_quotient(I)));
}
BENCHMARK(BM_Duval16QuotientPoset)->Unit(benchmark::kMillisecond);

static void BM_Duval16HilbertOracle(benchmark::State& state)
{
    const MonomialIdeal I = parse_ideal(reference::duval16_ideal).ideal;
    const MonomialIdeal unit = MonomialIdeal::unit(16);
    for (auto _ : state)
        for (int j = 0; j <= 16; ++j)
            benchmark::DoNotOptimize(hilbert_alpha_oracle(unit, I, j));
}
BENCHMARK(BM_Duval16HilbertOracle)->Unit(benchmark::kMillisecond);

static void BM_SandwichReport(benchmark::State& state)
{
    const Graph g = make_graph(static_cast<GraphFamily>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sandwich_report(g).sdepth);
}
BENCHMARK(BM_SandwichReport)
    ->Args({static_cast<int>(GraphFamily::cycle), 4})
    ->Args({static_cast<int>(GraphFamily::path), 5})
    ->Args({static_cast<int>(GraphFamily::complete), 5})
    ->Unit(benchmark::kMillisecond);

static void BM_PartitionSearchThreads(benchmark::State& state)
{
    const SubsetFamily P = poset_of_ideal(MonomialIdeal::maximal(10));
    SearchOptions o;
    o.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(has_partition(P, 5, o).status);
}
BENCHMARK(BM_PartitionSearchThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
