#include <benchmark/benchmark.h>

#include <string>

#include "puiseux/dsl/parser.hpp"

static std::string program(int statements) {
  std::string text;
  for (int i = 0; i < statements; ++i) {
    text += "let M" + std::to_string(i) + " = pm(1/2, 3/4) + cyclic(5/3);\n";
    text += "Zl(family(exAexB, window=10), 2, 2); L(M" + std::to_string(i) + ", 12)\n;";
  }
  return text;
}

static void BM_ParsePrint(benchmark::State& state) {
  const std::string text = program(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto parsed = puiseux::dsl::parse(text);
    benchmark::DoNotOptimize(puiseux::dsl::print(parsed));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParsePrint)->Arg(1)->Arg(64)->Arg(1024);
