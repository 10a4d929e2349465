#include <benchmark/benchmark.h>

#include "chopf/cobar.hpp"
#include "chopf/diffeo.hpp"
#include "chopf/nsym.hpp"
#include "chopf/series.hpp"
#include "chopf/sym.hpp"
#include "chopf/topology.hpp"

using namespace chopf;

static void BM_Revert(benchmark::State& state)
{
    const Series t = fdb_generic_series(kFdB, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ps_revert(t));
}
BENCHMARK(BM_Revert)->DenseRange(4, 10, 2);

static void BM_Compose(benchmark::State& state)
{
    const Series z = nsym_generic_series(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ps_compose(z, z));
}
BENCHMARK(BM_Compose)->DenseRange(4, 8, 2);

static void BM_BfkCoproduct(benchmark::State& state)
{
    const Element x = Element::basis(kNSym, {static_cast<int>(state.range(0))});
    for (auto _ : state)
        benchmark::DoNotOptimize(bfk_coproduct(x));
}
BENCHMARK(BM_BfkCoproduct)->DenseRange(3, 9, 2);

static void BM_BfkAntipode(benchmark::State& state)
{
    const Element x = Element::basis(kNSym, {static_cast<int>(state.range(0))});
    for (auto _ : state)
        benchmark::DoNotOptimize(bfk_antipode(x));
}
BENCHMARK(BM_BfkAntipode)->DenseRange(3, 7, 2);

static void BM_SymConvertMtoE(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (const auto& lam : partitions_of(n))
            benchmark::DoNotOptimize(sym_convert_rational(Element::basis(kSymM, lam.parts()), Basis::e));
}
BENCHMARK(BM_SymConvertMtoE)->DenseRange(4, 8, 2);

static void BM_QuasiShuffle(benchmark::State& state)
{
    const Composition a(Word(static_cast<std::size_t>(state.range(0)), 1));
    const Composition b{2, 1, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(quasi_shuffle(a, b));
}
BENCHMARK(BM_QuasiShuffle)->DenseRange(2, 6, 2);

static void BM_FormalGroupLaw(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(fgl(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FormalGroupLaw)->DenseRange(3, 7, 2);

static void BM_CohomologyRank(benchmark::State& state)
{
    const SplitAlgebroid alg(AlgebroidKind::sym_fdb);
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology_rank(alg, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_CohomologyRank)->DenseRange(2, 5, 1);
BENCHMARK_MAIN();
