#include <benchmark/benchmark.h>

#include "symrep/character.hpp"
#include "symrep/fock.hpp"
#include "symrep/orthogonal.hpp"
#include "symrep/schur.hpp"
#include "symrep/seminormal.hpp"

using namespace symrep;

namespace {

void BM_Partitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(partitions_of(n));
}
BENCHMARK(BM_Partitions)->Arg(20)->Arg(40);

void BM_SeminormalRep(benchmark::State& state) {
    const Partition la({3, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(seminormal_rep(la));
}
BENCHMARK(BM_SeminormalRep);

void BM_OrthogonalRep(benchmark::State& state) {
    const Partition la({3, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(orthogonal_rep(la));
}
BENCHMARK(BM_OrthogonalRep);

void BM_CharacterTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(character_table(n));
}
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(8);

void BM_SchurPoly(benchmark::State& state) {
    const Partition la({4, 3, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(schur_poly(la));
}
BENCHMARK(BM_SchurPoly);

void BM_HeisenbergResidual(benchmark::State& state) {
    const Partition la({3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(heisenberg_residual(3, -3, la, 14));
}
BENCHMARK(BM_HeisenbergResidual);

} // namespace

BENCHMARK_MAIN();
