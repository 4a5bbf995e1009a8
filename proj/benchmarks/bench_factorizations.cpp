#include <benchmark/benchmark.h>

#include "puiseux/extension.hpp"
#include "puiseux/families.hpp"
#include "puiseux/fg_monoid.hpp"

using namespace puiseux;

static void BM_FactorizationsNumerical(benchmark::State& state) {
  FgMonoid m({Rational(6), Rational(10), Rational(15)});
  const Rational q(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m.factorizations(q).size());
}
BENCHMARK(BM_FactorizationsNumerical)->Arg(60)->Arg(120)->Arg(240);

static void BM_FactorizationsViaOffsets(benchmark::State& state) {
  FgMonoid m({Rational(4), Rational::reduce(9, 2)});
  const Rational r = Rational::reduce(7, 3);
  const Rational q(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorizations_via_offsets(m, r, q).size());
}
BENCHMARK(BM_FactorizationsViaOffsets)->Arg(20)->Arg(40);

static void BM_ExAExBWindow(benchmark::State& state) {
  const auto window = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_factorizations(FamilyKind::kExAExB, Rational(2), window).size());
  }
}
BENCHMARK(BM_ExAExBWindow)->Arg(4)->Arg(8);

static void BM_IntervalLengthTwo(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(interval_length_factorizations(Rational(3), 2, bound).size());
  }
}
BENCHMARK(BM_IntervalLengthTwo)->Arg(12)->Arg(48);
