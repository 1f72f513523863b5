#include <benchmark/benchmark.h>

#include "yangcheck/envelope.hpp"
#include "yangcheck/expression.hpp"
#include "yangcheck/gklo.hpp"
#include "yangcheck/heckerep.hpp"
#include "yangcheck/shuffle.hpp"

using namespace yc;

static void BM_RationalArithmetic(benchmark::State& st) {
  RationalFunction a = parse_rational("(w1 + hbar)/((w1 - w2)*(w1 - w3))");
  RationalFunction b = parse_rational("(w2 - hbar)/((w2 - w3)*(w2 - w1 - hbar))");
  for (auto _ : st) benchmark::DoNotOptimize((a + b) * (a - b) / (a * b + RationalFunction(1L)));
}
BENCHMARK(BM_RationalArithmetic);

static void BM_PBWProduct(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  PBWElement x = parse_pbw("E12*E23 + E31*E11 - hbar*E22", N), y = parse_pbw("E32*E21*E13 + E33", N);
  for (auto _ : st) benchmark::DoNotOptimize(x * y * x);
}
BENCHMARK(BM_PBWProduct)->Arg(3)->Arg(4);

static void BM_QuantumDeterminant(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(quantum_determinant(N));
}
BENCHMARK(BM_QuantumDeterminant)->DenseRange(2, 4);

static void BM_ShuffleProduct(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const bool hecke = st.range(1) != 0;
  Polynomial f = monomial_symmetric(Partition{{2, 1}}, k), g = monomial_symmetric(Partition{{1}}, 2);
  Polynomial kappa = Var::hbar();
  for (auto _ : st)
    benchmark::DoNotOptimize(hecke ? hecke_product(f, k, g, 2, kappa) : fo_product(f, k, g, 2, kappa));
}
BENCHMARK(BM_ShuffleProduct)->ArgsProduct({{2, 3}, {0, 1}});

static void BM_GkloRelations(benchmark::State& st) {
  const int N = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(verify_relations(N));
}
BENCHMARK(BM_GkloRelations)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Monopole(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(monopole(2, 4));
}
BENCHMARK(BM_Monopole)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
