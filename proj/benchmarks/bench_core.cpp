#include <benchmark/benchmark.h>

#include <random>

#include "jordanpers/distances.hpp"
#include "jordanpers/jordan.hpp"
#include "jordanpers/module.hpp"
#include "jordanpers/multirank.hpp"

using namespace jordanpers;

namespace {

FieldMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  FieldMatrix m(n, n, kDefaultPrime);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, gen() % kDefaultPrime);
  return m;
}

void BM_rank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_jordan_type_grid(benchmark::State& state) {
  const auto g = Poset::make_grid({3, 2});
  const auto m = random_module(g, static_cast<int>(state.range(0)), 7, kDefaultPrime);
  const auto s = norm_slices(g);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_type(m, s));
}
BENCHMARK(BM_jordan_type_grid)->Arg(2)->Arg(4)->Arg(8);

void BM_filtered_rank(benchmark::State& state) {
  const auto g = Poset::make_grid({2, 2});
  const auto m = random_module(g, static_cast<int>(state.range(0)), 11, kDefaultPrime);
  const auto s = norm_slices(g);
  for (auto _ : state) benchmark::DoNotOptimize(filtered_rank(m, s));
}
BENCHMARK(BM_filtered_rank)->Arg(2)->Arg(3);

void BM_barcode_zigzag(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto z = Poset::make_zigzag(n, std::string(n - 1, 'F'));
  const auto m = random_conjugation(
      interval_sum_module(z, random_bars(n, 6, 3), kDefaultPrime), 5);
  for (auto _ : state) benchmark::DoNotOptimize(barcode_from_R(m));
}
BENCHMARK(BM_barcode_zigzag)->Arg(4)->Arg(6)->Arg(8);

void BM_erosion_at_S(benchmark::State& state) {
  const auto g = Poset::make_grid({2, 1});
  const auto m = random_module(g, 2, 23, kDefaultPrime);
  const auto n = shift(m, {1, 1});
  const auto s = norm_slices(g);
  for (auto _ : state) benchmark::DoNotOptimize(erosion_distance_at_S(m, n, s));
}
BENCHMARK(BM_erosion_at_S);

}  // namespace

BENCHMARK_MAIN();
