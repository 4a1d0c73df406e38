// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "norlund/identities.hpp"
#include "norlund/kernels.hpp"
#include "norlund/rational.hpp"

using namespace norlund;

namespace {

std::vector<Rational> random_coeffs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
  return v;
}

void BM_ConvolveSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::convolve<Rational>(a, b, n));
  state.SetComplexityN(state.range(0));
}

void BM_ConvolveParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::convolve<Rational>(a, b, n));
  state.SetComplexityN(state.range(0));
}

GridOverride bench_grid() {
  GridOverride g;
  g.n_max = 8;
  g.m_max = 3;
  return g;
}

void BM_RegistrySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_checks_serial(identity_registry(), bench_grid(), 1));
}

void BM_RegistryParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_checks(identity_registry(), bench_grid(), 1));
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_RegistrySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegistryParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
