#include "mclab/hessdefs.hpp"
#include "mclab/mcfields.hpp"
#include "mclab/polybasis.hpp"

#include <benchmark/benchmark.h>

using namespace mclab;

static void BM_BuildAlgebra(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(SplitLieAlgebra::build('A', n).dim());
}
BENCHMARK(BM_BuildAlgebra)->Arg(2)->Arg(3)->Arg(4);

static void BM_ChartSecondKind(benchmark::State& st) {
    auto alg = SplitLieAlgebra::build('A', static_cast<int>(st.range(0)));
    for (auto _ : st) {
        Chart ch(alg, ChartKind::second_kind);
        benchmark::DoNotOptimize(ch.from_log().size());
    }
}
BENCHMARK(BM_ChartSecondKind)->Arg(2)->Arg(3)->Arg(4);

static void BM_SolveSl4Type2(benchmark::State& st) {
    auto alg = SplitLieAlgebra::build('A', 3);
    Chart ch(alg, ChartKind::matrix_inverse);
    auto hs = type_p_subset(alg.root_system(), 2);
    for (auto _ : st) benchmark::DoNotOptimize(solve_mc(hs, ch).dimension);
}
BENCHMARK(BM_SolveSl4Type2)->Unit(benchmark::kMillisecond);

static void BM_SolveSp2(benchmark::State& st) {
    auto alg = SplitLieAlgebra::build('C', 2);
    Chart ch(alg, ChartKind::sp2_paper);
    auto hs = validate(alg.root_system(), {0, 1, 2});
    for (auto _ : st) benchmark::DoNotOptimize(solve_mc(hs, ch).dimension);
}
BENCHMARK(BM_SolveSp2)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormsVsOracle(benchmark::State& st) {
    auto alg = SplitLieAlgebra::build('A', static_cast<int>(st.range(0)));
    Chart ch(alg, ChartKind::three_factor);
    for (auto _ : st) benchmark::DoNotOptimize(check_against_oracle(ch).size());
}
BENCHMARK(BM_ClosedFormsVsOracle)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SymbolicDeterminantA4(benchmark::State& st) {
    auto alg = SplitLieAlgebra::build('A', 4);
    Chart ch(alg, ChartKind::matrix_inverse);
    auto sets = enumerate_all(alg.root_system());
    CartanParam S;
    S.symbolic = true;
    for (auto _ : st) {
        std::size_t ok = 0;
        for (auto& hs : sets) ok += smoothness_certificate(defining_equations(ch, hs, S)).identity_holds;
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_SymbolicDeterminantA4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
