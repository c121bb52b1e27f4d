#include <benchmark/benchmark.h>

#include "schubert/weyl.hpp"

using namespace schubert;

namespace {

void BM_GroupClosure(benchmark::State& state) {
  const CartanMatrix b3 = CartanMatrix::type_b(3);
  for (auto _ : state) {
    WeylGroup group(b3);  // fresh group: closure is not cached across iterations
    benchmark::DoNotOptimize(group.elements().size());
  }
}
BENCHMARK(BM_GroupClosure);

void BM_RootSystemF4(benchmark::State& state) {
  const CartanMatrix f4 = CartanMatrix::type_f4();
  for (auto _ : state) {
    WeylGroup group(f4);
    benchmark::DoNotOptimize(group.roots().positive_roots().size());
  }
}
BENCHMARK(BM_RootSystemF4);

void BM_ReducedWords(benchmark::State& state) {
  const WeylGroup group(CartanMatrix::type_a(3));
  WeylElement longest = group.identity();
  for (const auto& w : group.elements()) {
    if (w.length() > longest.length()) longest = w;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(longest.reduced_words().size());
  }
}
BENCHMARK(BM_ReducedWords);

void BM_BruhatMatrix(benchmark::State& state) {
  for (auto _ : state) {
    // Fresh group per round so the memo starts cold.
    const WeylGroup group(CartanMatrix::type_a(3));
    const auto elements = group.elements();
    std::size_t below = 0;
    for (const auto& u : elements) {
      for (const auto& v : elements) {
        below += bruhat_leq(u, v);
      }
    }
    benchmark::DoNotOptimize(below);
  }
}
BENCHMARK(BM_BruhatMatrix);

void BM_Interval(benchmark::State& state) {
  const WeylGroup group(CartanMatrix::type_f4());
  const WeylElement w = group.from_word(Word{0, 1, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(interval(w, {0}).elements.size());
  }
}
BENCHMARK(BM_Interval);

}  // namespace

BENCHMARK_MAIN();
