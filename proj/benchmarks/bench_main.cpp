#include <benchmark/benchmark.h>

#include "ncdedekind/cocycle.hpp"
#include "ncdedekind/iterint.hpp"
#include "ncdedekind/modforms.hpp"
#include "ncdedekind/symbols.hpp"

using namespace ncdedekind;

static void BM_ReconstructClassical(benchmark::State& state) {
  const AdditiveRatGroup rat;
  const PairFunction<AdditiveRatGroup> F = classical_reciprocity;
  const auto pair = CoprimePair::make(state.range(0), (state.range(0) - 1) / 2);  // 2q = p - 1
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(rat, F, pair));
}
BENCHMARK(BM_ReconstructClassical)->Arg(51)->Arg(1001)->Arg(100001);

static void BM_ReconstructFree(benchmark::State& state) {
  const FreeGroup free(3);
  const RandomFreeSymbol D = random_symbol(1, 30, free);
  const PairFunction<FreeGroup> f = derive_reciprocity<FreeGroup>(free, D);
  const auto pair = CoprimePair::make(197, 88);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(free, f, pair));
}
BENCHMARK(BM_ReconstructFree);

static void BM_CuspBasis(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cusp_basis(static_cast<int>(state.range(0)), 160));
}
BENCHMARK(BM_CuspBasis)->Arg(12)->Arg(28)->Unit(benchmark::kMillisecond);

static void BM_ReciprocityIntegral(benchmark::State& state) {
  IterintConfig c;
  c.depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // a fresh engine each time so the memo does not hide the work
    const IteratedIntegrals ii(c);
    benchmark::DoNotOptimize(ii.reciprocity_integral(CoprimePair::make(3, 2)));
  }
}
BENCHMARK(BM_ReciprocityIntegral)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SymbolDirect(benchmark::State& state) {
  const IteratedIntegrals ii;
  const auto pair = CoprimePair::make(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ii.symbol_direct(pair));
}
BENCHMARK(BM_SymbolDirect)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  PSL2Elt g = PSL2Elt::identity();
  for (int k = 0; k < state.range(0); ++k) g = g * (k % 3 ? tau() : sigma());
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
