#include <benchmark/benchmark.h>

#include <random>

#include "akchar/multipoly.hpp"
#include "akchar/partitions.hpp"
#include "akchar/regev.hpp"
#include "akchar/superrep.hpp"

namespace {

using akchar::MultiPartition;
using akchar::MultiPoly;

MultiPoly random_poly(std::mt19937& rng, std::size_t m, int terms) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> e(0, 4);
  akchar::MultiPolyBuilder b(m);
  for (int i = 0; i < terms; ++i) {
    akchar::Exponents x(m + 1);
    for (auto& v : x) v = e(rng);
    b.add(x, c(rng));
  }
  return std::move(b).build();
}

void BM_MultiPolyMultiply(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto terms = static_cast<int>(state.range(0));
  const MultiPoly a = random_poly(rng, 3, terms);
  const MultiPoly b = random_poly(rng, 3, terms);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MultiPolyMultiply)->Arg(8)->Arg(32)->Arg(128);

// Closed-form value versus the operator trace for mu = ((n)) at k = l = (1, 1).
void BM_CharacterValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto mu = MultiPartition::from_parts({{n}, {}});
  for (auto _ : state) benchmark::DoNotOptimize(akchar::character_value(mu, {1, 1}, {1, 1}));
}
BENCHMARK(BM_CharacterValue)->DenseRange(2, 5);

void BM_TraceOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto mu = MultiPartition::from_parts({{n}, {}});
  for (auto _ : state) benchmark::DoNotOptimize(akchar::char_value_oracle(mu, {1, 1}, {1, 1}));
}
BENCHMARK(BM_TraceOracle)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Theta(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(akchar::theta(2, a, {2, 1, 1}, {1, 2, 1}));
}
BENCHMARK(BM_Theta)->DenseRange(2, 8, 2);

void BM_GroupOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto mu = MultiPartition::from_parts({{}, {n}, {}, {}});
  for (auto _ : state) {
    akchar::GroupOracle oracle({2, 2, 1, 1}, {1, 1, 2, 2});
    benchmark::DoNotOptimize(oracle.value(mu));
  }
}
BENCHMARK(BM_GroupOracle)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
