#include <benchmark/benchmark.h>

#include "puiseux/families.hpp"
#include "puiseux/fg_monoid.hpp"

using namespace puiseux;

static void BM_ContainsSmallGenerators(benchmark::State& state) {
  const auto target = Rational(state.range(0)) + Rational::reduce(1, 4);
  for (auto _ : state) {
    // Fresh monoid each round so the reach cache does not hide the search.
    FgMonoid m({Rational::reduce(7, 4), Rational::reduce(11, 6), Rational(5)});
    benchmark::DoNotOptimize(m.contains(target));
  }
}
BENCHMARK(BM_ContainsSmallGenerators)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ContainsGramsTruncation(benchmark::State& state) {
  FgMonoid m = truncate({FamilyKind::kGrams}, static_cast<std::uint64_t>(state.range(0)));
  const Rational target = Rational::reduce(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(m.contains(target));
}
BENCHMARK(BM_ContainsGramsTruncation)->DenseRange(2, 6, 2);

static void BM_SquareDenMembership(benchmark::State& state) {
  const Rational target = Rational::parse("9/8");
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_contains(FamilyKind::kIntervalSquareDen, target));
  }
}
BENCHMARK(BM_SquareDenMembership);
