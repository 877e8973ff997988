#include <benchmark/benchmark.h>

#include <fuchsian/document.hpp>
#include <fuchsian/families.hpp>
#include <fuchsian/schottky.hpp>
#include <fuchsian/topology.hpp>

using namespace fuchsian;

static void BM_VerifyCantor(benchmark::State& state) {
  const auto desc = describe(truncate(Kind::cantor, static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify(desc));
}
BENCHMARK(BM_VerifyCantor)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_TruncateBlooming(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(truncate(Kind::blooming, 4, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_TruncateBlooming)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ReduceDeepPoint(benchmark::State& state) {
  const auto desc = describe(truncate(Kind::cantor, 3));
  const ReducedWord word({1, 2, -3, 1, 5, 2});
  const UpperPoint z = apply_word(desc, word, UpperPoint(0, 1));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(desc, z));
}
BENCHMARK(BM_ReduceDeepPoint);

static void BM_Tiles(benchmark::State& state) {
  const auto desc = describe(truncate(Kind::cantor, 2));
  for (auto _ : state) benchmark::DoNotOptimize(tessellation_tiles(desc, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Tiles)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_Signature(benchmark::State& state) {
  const auto desc = describe(truncate(Kind::cantor, static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(signature(desc));
}
BENCHMARK(BM_Signature)->Arg(4)->Arg(8);

static void BM_SaveLoad(benchmark::State& state) {
  const auto doc = make_document(Kind::cantor, 6);
  for (auto _ : state) benchmark::DoNotOptimize(load_document(save(doc)));
}
BENCHMARK(BM_SaveLoad)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
