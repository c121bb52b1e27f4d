#include <benchmark/benchmark.h>

#include "schubert/atlas.hpp"

using namespace schubert;

namespace {

void BM_CheckIsoRank4(benchmark::State& state) {
  const SchubertDatum a4(CartanMatrix::type_a(4), Word{3, 2, 1, 0}, {3});
  const SchubertDatum b4(CartanMatrix::type_b(4), Word{0, 1, 2, 3}, {0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_iso(a4, b4).kind);
  }
}
BENCHMARK(BM_CheckIsoRank4);

void BM_Chevalley(benchmark::State& state) {
  const WeylGroup group(CartanMatrix::type_b(3));
  WeylElement longest = group.identity();
  for (const auto& w : group.elements()) {
    if (w.length() > longest.length()) longest = w;
  }
  const SchubertDatum flag(group, longest, {});
  for (auto _ : state) {
    for (const auto& [v, degree] : basis(flag)) {
      benchmark::DoNotOptimize(chevalley(flag, 0, v).coefficients.size());
    }
  }
}
BENCHMARK(BM_Chevalley);

void BM_SurfaceAtlas(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface_atlas().records.size());
  }
}
BENCHMARK(BM_SurfaceAtlas);

}  // namespace

BENCHMARK_MAIN();
