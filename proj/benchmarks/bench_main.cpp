#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "morphdet/determined.hpp"
#include "morphdet/oracle.hpp"

using namespace morphdet;

namespace {

AlgebraPtr linear(std::size_t n) {
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) a.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return BoundQuiverAlgebra::create(PrimeField(5), Quiver(v, a), {});
}

AlgebraPtr kronecker() {
  return BoundQuiverAlgebra::create(PrimeField(5), Quiver({"1", "2"}, {{"x", 0, 1}, {"y", 0, 1}}), {});
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PrimeField f(1000003);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Residue>(rng() % f.modulus());
  return m;
}

}  // namespace

static void BM_rref(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

static void BM_hom_space_kronecker(benchmark::State& state) {
  auto k = kronecker();
  const auto d = static_cast<std::size_t>(state.range(0));
  auto m = random_representation(k, {d, d}, 1);
  auto n = random_representation(k, {d, d}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(m, n).dim());
}
BENCHMARK(BM_hom_space_kronecker)->DenseRange(2, 8, 2);

static void BM_radical_end(benchmark::State& state) {
  auto k = kronecker();
  const auto d = static_cast<std::size_t>(state.range(0));
  auto m = random_representation(k, {d, d}, 3);
  auto mm = direct_sum_module(std::vector{m, m}, k);
  auto end = end_algebra(mm);
  for (auto _ : state) benchmark::DoNotOptimize(radical(end.algebra));
}
BENCHMARK(BM_radical_end)->DenseRange(1, 3);

static void BM_decompose(benchmark::State& state) {
  auto k = kronecker();
  const auto d = static_cast<std::size_t>(state.range(0));
  auto m = random_representation(k, {d + 1, d}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m).size());
}
BENCHMARK(BM_decompose)->DenseRange(2, 6, 2);

static void BM_tau_linear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto alg = linear(n);
  std::vector<std::size_t> dims(n, 2);
  auto m = random_representation(alg, dims, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tau(m).total_dim());
}
BENCHMARK(BM_tau_linear)->DenseRange(3, 9, 3);

static void BM_almost_split_linear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto alg = linear(n);
  std::vector<std::size_t> dims(n, 0);
  dims[n / 2] = dims[n / 2 + 1] = 1;
  auto z = random_representation(alg, dims, 0);
  for (auto _ : state) benchmark::DoNotOptimize(almost_split_ending_at(z).morphism.source().total_dim());
}
BENCHMARK(BM_almost_split_linear)->DenseRange(4, 8, 2);

static void BM_minimal_determinator(benchmark::State& state) {
  auto alg = linear(3);
  const auto d = static_cast<std::size_t>(state.range(0));
  auto x = random_representation(alg, {d, d, 1}, 6);
  auto y = random_representation(alg, {1, d, d}, 7);
  auto f = random_morphism(x, y, 8);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_determinator(f).size());
}
BENCHMARK(BM_minimal_determinator)->DenseRange(1, 3);

static void BM_enumerate_a2(benchmark::State& state) {
  auto alg = linear(2);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_test_modules(alg, {d, d}).size());
}
BENCHMARK(BM_enumerate_a2)->DenseRange(1, 2);
BENCHMARK_MAIN();
