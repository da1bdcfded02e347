#include <benchmark/benchmark.h>

#include <random>

#include "gruss/bounds.hpp"
#include "gruss/jensen.hpp"
#include "gruss/sharpness.hpp"

namespace {

using namespace gruss;

std::vector<Vector> random_points(const Space& space, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = Vector::zeros(space.dim());
    for (std::size_t k = 0; k < space.dim(); ++k) v[k] = normal(rng);
    out.push_back(std::move(v));
  }
  return out;
}

void BM_Chebyshev(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Space space = Space::real(8);
  const auto xs = random_points(space, n, 1);
  const auto ys = random_points(space, n, 2);
  const ProbabilityVector p = ProbabilityVector::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev(space, p, xs, ys));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Chebyshev)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oN);

void BM_ChainThm23(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Space space = Space::real(8);
  const auto xs = random_points(space, n, 3);
  const auto ys = random_points(space, n, 4);
  const Enclosure encl = fit_enclosure(space, xs);
  const ProbabilityVector p = ProbabilityVector::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(chain_thm23(space, encl, p, xs, ys));
}
BENCHMARK(BM_ChainThm23)->RangeMultiplier(8)->Range(16, 8192);

void BM_FitEnclosure(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Space space = Space::real(8);
  const auto xs = random_points(space, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fit_enclosure(space, xs));
}
BENCHMARK(BM_FitEnclosure)->RangeMultiplier(8)->Range(16, 4096);

void BM_ReverseJensen(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Space space = Space::real(8);
  const auto zs = random_points(space, n, 6);
  const std::vector<double> q(n, 1.0);
  const ConvexOracle f = oracles::log_sum_exp(space);
  for (auto _ : state) benchmark::DoNotOptimize(reverse_jensen(space, f, q, zs));
}
BENCHMARK(BM_ReverseJensen)->RangeMultiplier(8)->Range(16, 4096);

void BM_SharpnessSearch(benchmark::State& state) {
  SearchConfig config;
  config.target = SharpnessTarget::Rem24Final;
  config.budget = state.range(0);
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search(config));
}
BENCHMARK(BM_SharpnessSearch)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
