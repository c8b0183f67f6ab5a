#include <benchmark/benchmark.h>

#include "knotsig/factor.hpp"
#include "knotsig/seifert.hpp"
#include "knotsig/sturm.hpp"

using namespace knotsig;

namespace {

void BM_FactorQuartic(benchmark::State& state) {
  IntPoly p{1, 1, -3, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorQuartic);

void BM_FactorRandomAlexander(benchmark::State& state) {
  int genus = static_cast<int>(state.range(0));
  IntPoly p = alexander(random_seifert(genus, 3, 20250801));
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorRandomAlexander)->Arg(2)->Arg(3)->Arg(4);

void BM_FactorCyclotomicProduct(benchmark::State& state) {
  std::vector<Int> c(13, Int(0));
  c[0] = -1;
  c[12] = 1;
  IntPoly p{std::move(c)};  // t^12 - 1: six irreducible factors
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorCyclotomicProduct);

void BM_IsolateRoots(benchmark::State& state) {
  // Trace polynomial of a degree-12 palindrome with several circle roots.
  IntPoly p{1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1};
  IntPoly tr = trace_polynomial(p);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(tr, Rat(-2), Rat(2)));
}
BENCHMARK(BM_IsolateRoots);

void BM_RefineInterval(benchmark::State& state) {
  IntPoly q{-1, -1, 1};  // x^2 - x - 1
  Interval iv{Rat(1), Rat(2)};
  Rat width(1, Int(1) << 64);
  for (auto _ : state) benchmark::DoNotOptimize(refine_interval(q, iv, width));
}
BENCHMARK(BM_RefineInterval);

}  // namespace
