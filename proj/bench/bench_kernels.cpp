#include <benchmark/benchmark.h>

#include "regulous/kernels.hpp"
#include "regulous/parse.hpp"

using namespace regulous;

namespace {

Poly2 dense(unsigned n) { return parse_polynomial("(1 + 3*x - 2*y + x*y/7 + x^2 - y^2/3)^" + std::to_string(n)); }

void BM_MultiplySerial(benchmark::State& state) {
  const Poly2 a = dense(static_cast<unsigned>(state.range(0)));
  const Poly2 b = a + Poly2(1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(a, b));
}

void BM_MultiplyParallel(benchmark::State& state) {
  const Poly2 a = dense(static_cast<unsigned>(state.range(0)));
  const Poly2 b = a + Poly2(1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(a, b));
}

const RatFunc& worked_example() {
  static const RatFunc f = parse_expression("((x+y)^2+(x-y+y^2)^2)/((x+y^2)^2+y^2)");
  return f;
}

void BM_GridSerial(benchmark::State& state) {
  const auto grid = kernels::uniform_grid(Rat(-2), Rat(1, 10), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_grid_serial(worked_example(), grid));
}

void BM_GridParallel(benchmark::State& state) {
  const auto grid = kernels::uniform_grid(Rat(-2), Rat(1, 10), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_grid_parallel(worked_example(), grid));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
