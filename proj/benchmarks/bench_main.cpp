#include <benchmark/benchmark.h>
static void BM_Noop(benchmark::State& s) { for (auto _ : s) {} }
BENCHMARK(BM_Noop);
BENCHMARK_MAIN();
