#include <benchmark/benchmark.h>

#include "knotsig/realize.hpp"

using namespace knotsig;

namespace {

void BM_RealizeAlexanderTridiagonal(benchmark::State& state) {
  IntPoly delta{1, -1, 1, -1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(realize_alexander(delta));
}
BENCHMARK(BM_RealizeAlexanderTridiagonal);

void BM_RealizeAlexanderBordered(benchmark::State& state) {
  IntPoly delta{1, 1, -3, 1, 1};  // escapes the tridiagonal family
  for (auto _ : state) benchmark::DoNotOptimize(realize_alexander(delta));
}
BENCHMARK(BM_RealizeAlexanderBordered);

void BM_DenseQuartic(benchmark::State& state) {
  Interval arc{Rat(17, 10), Rat(19, 10)};
  for (auto _ : state) benchmark::DoNotOptimize(dense_quartic(arc));
}
BENCHMARK(BM_DenseQuartic);

void BM_RealizeTrefoilFunction(benchmark::State& state) {
  StepFunction target = signature_function(realize_alexander(IntPoly{1, -1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(realize(target));
}
BENCHMARK(BM_RealizeTrefoilFunction);

}  // namespace
