#include "toric_diamond/diamond.hpp"
#include "toric_diamond/guillemin.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace toric_diamond;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-50, 50);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const IntMatrix m = random_matrix(n, n + 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(lattice::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(8);

void BM_GOmegaMatrixTree(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto w = diamond::family_general(k, 1, 0).front();
  for (auto _ : state) benchmark::DoNotOptimize(reduction::g_omega_order(w));
}
BENCHMARK(BM_GOmegaMatrixTree)->DenseRange(1, 6);

void BM_GOmegaBruteforce(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto w = diamond::family_general(k, 1, 0).front();
  for (auto _ : state) benchmark::DoNotOptimize(reduction::g_omega_order_bruteforce(w));
}
BENCHMARK(BM_GOmegaBruteforce)->DenseRange(1, 5);

void BM_WeightsToDiamond(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto w = diamond::family_general(k, 1, 3).front();
  for (auto _ : state) benchmark::DoNotOptimize(diamond::weights_to_diamond(w));
}
BENCHMARK(BM_WeightsToDiamond)->DenseRange(1, 5);

void BM_LegendreInverse(benchmark::State& state) {
  const auto fan = toric::AugmentedFan::from_marks({{1, 0}, {0, 1}, {-1, -1}});
  const auto p = guillemin::LabeledPolytope::anticanonical(fan);
  for (auto _ : state) benchmark::DoNotOptimize(guillemin::legendre_inverse(p, {1.5, -2.0}));
}
BENCHMARK(BM_LegendreInverse);

}  // namespace
BENCHMARK_MAIN();
