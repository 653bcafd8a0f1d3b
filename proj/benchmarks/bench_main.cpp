#include <benchmark/benchmark.h>

#include "whitefact/explorer.hpp"
#include "whitefact/factorization.hpp"
#include "whitefact/random.hpp"
#include "whitefact/tree.hpp"

using namespace whitefact;

namespace {

SystemRef z342() { return cyclic_system({3, 4, 2}); }

std::vector<Word> words(const SystemRef& s, std::size_t length, std::size_t count) {
  Rng rng(1);
  std::vector<Word> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_word_of_length(s, length, rng));
  return out;
}

void BM_WordProduct(benchmark::State& state) {
  auto s = z342();
  const auto ws = words(s, state.range(0), 64);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ws[k % 64] * ws[(k + 1) % 64]);
    ++k;
  }
}
BENCHMARK(BM_WordProduct)->Arg(4)->Arg(16)->Arg(64);

void BM_Geodesic(benchmark::State& state) {
  auto s = z342();
  const auto ws = words(s, state.range(0), 64);
  std::size_t k = 0;
  for (auto _ : state) {
    const TreeVertex p = TreeVertex::u(ws[k % 64]);
    const TreeVertex q = TreeVertex::c(2, ws[(k + 7) % 64]);
    benchmark::DoNotOptimize(geodesic(p, q));
    ++k;
  }
}
BENCHMARK(BM_Geodesic)->Arg(4)->Arg(16);

void BM_Factorize(benchmark::State& state) {
  auto s = z342();
  Rng rng(2);
  std::vector<PureSymmetricAuto> autos;
  for (int k = 0; k < 32; ++k) autos.push_back(random_auto(s, state.range(0), rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(autos[k % autos.size()]));
    ++k;
  }
}
BENCHMARK(BM_Factorize)->Arg(2)->Arg(4)->Arg(8);

void BM_EnumerateBall(benchmark::State& state) {
  auto s = cyclic_system({2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(s, state.range(0)));
}
BENCHMARK(BM_EnumerateBall)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
