#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "statemap/exponential.hpp"
#include "statemap/generator.hpp"
#include "statemap/oracle.hpp"

namespace {

using statemap::Complex;
using statemap::StateVector;

StateVector random_state(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> values(d);
  for (auto& z : values) z = {normal(rng), normal(rng)};
  return StateVector(std::move(values));
}

struct Pair {
  StateVector a;
  StateVector b;
};

Pair make_pair(std::int64_t d) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(d) * 7919u);
  const auto n = static_cast<std::size_t>(d);
  auto a = random_state(n, rng);
  auto b = random_state(n, rng);
  return {std::move(a), std::move(b)};
}

void set_dimension_counters(benchmark::State& state) {
  state.counters["d"] = static_cast<double>(state.range(0));
}

// Invariants, case, angle, coefficients, then one application to a.
void BM_ClosedFormConstructApply(benchmark::State& state) {
  const auto pair = make_pair(state.range(0));
  for (auto _ : state) {
    auto mapping = statemap::map_state(pair.a, pair.b);
    auto image = mapping.unitary(pair.a);
    benchmark::DoNotOptimize(image);
  }
  set_dimension_counters(state);
  state.SetComplexityN(state.range(0));
}

void BM_ClosedFormApply(benchmark::State& state) {
  const auto pair = make_pair(state.range(0));
  const auto mapping = statemap::map_state(pair.a, pair.b);
  for (auto _ : state) {
    auto image = mapping.unitary(pair.b);
    benchmark::DoNotOptimize(image);
  }
  set_dimension_counters(state);
  state.SetComplexityN(state.range(0));
}

void BM_DenseExpm(benchmark::State& state) {
  const auto pair = make_pair(state.range(0));
  const auto gen = statemap::make_generator(pair.a, pair.b);
  const double theta = statemap::solve_angle(gen, statemap::Branch::ShortWay);
  const auto scaled = statemap::generator_matrix(gen).scaled(theta / gen.invariants().Gamma);
  for (auto _ : state) {
    auto u = statemap::dense_expm(scaled);
    benchmark::DoNotOptimize(u);
  }
  set_dimension_counters(state);
}

void BM_GramSchmidt(benchmark::State& state) {
  const auto pair = make_pair(state.range(0));
  for (auto _ : state) {
    auto u = statemap::gram_schmidt_unitary(pair.a, pair.b);
    benchmark::DoNotOptimize(u);
  }
  set_dimension_counters(state);
}

} // namespace

BENCHMARK(BM_ClosedFormConstructApply)->RangeMultiplier(4)->Range(2, 1 << 16)->Complexity(benchmark::oN);
BENCHMARK(BM_ClosedFormApply)->RangeMultiplier(4)->Range(2, 1 << 16)->Complexity(benchmark::oN);
BENCHMARK(BM_DenseExpm)->RangeMultiplier(4)->Range(2, 512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GramSchmidt)->RangeMultiplier(4)->Range(2, 512)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
