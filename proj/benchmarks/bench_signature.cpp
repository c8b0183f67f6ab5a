#include <benchmark/benchmark.h>

#include "knotsig/signature.hpp"

using namespace knotsig;

namespace {

void BM_SignatureAt(benchmark::State& state) {
  SeifertMatrix v = random_seifert(static_cast<int>(state.range(0)), 3, 777);
  CircleSample s(Rat(5, 7));
  for (auto _ : state) benchmark::DoNotOptimize(signature_at(v, s));
}
BENCHMARK(BM_SignatureAt)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

void BM_SignatureFunctionTrefoil(benchmark::State& state) {
  SeifertMatrix v = SeifertMatrix::validate({{Int(-1), Int(1)}, {Int(0), Int(-1)}});
  for (auto _ : state) benchmark::DoNotOptimize(signature_function(v));
}
BENCHMARK(BM_SignatureFunctionTrefoil);

void BM_SignatureFunctionRandom(benchmark::State& state) {
  SeifertMatrix v = random_seifert(static_cast<int>(state.range(0)), 3, 4242);
  for (auto _ : state) benchmark::DoNotOptimize(signature_function(v));
}
BENCHMARK(BM_SignatureFunctionRandom)->Arg(2)->Arg(3)->Arg(4);

void BM_AlexanderPolynomial(benchmark::State& state) {
  SeifertMatrix v = random_seifert(static_cast<int>(state.range(0)), 3, 31415);
  for (auto _ : state) benchmark::DoNotOptimize(alexander(v));
}
BENCHMARK(BM_AlexanderPolynomial)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
