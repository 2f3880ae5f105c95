#include <benchmark/benchmark.h>

#include "stretchkit/jordan.hpp"
#include "stretchkit/random.hpp"
#include "stretchkit/stretching.hpp"

using namespace stretchkit;

namespace {

IndexSet cube(std::int64_t n) { return IndexSet::rectangular({static_cast<std::size_t>(n), static_cast<std::size_t>(n), 2}); }

void BM_ConvolveSumMap(benchmark::State& state, ScalarKind kind) {
  random::Engine rng(1);
  const IndexSet a = cube(state.range(0));
  const IndexMap f = IndexMap::linear(a, {1, 1, 1});
  const Tensor t1 = random::tensor(rng, a, kind), t2 = random::tensor(rng, a, kind);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(t1, t2, f));
  state.SetComplexityN(static_cast<std::int64_t>(a.size()));
}
BENCHMARK_CAPTURE(BM_ConvolveSumMap, gq, ScalarKind::GaussianRational)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_ConvolveSumMap, cf64, ScalarKind::ComplexFloat)->DenseRange(2, 5);

void BM_Stretch(benchmark::State& state) {
  random::Engine rng(2);
  const IndexSet a = cube(state.range(0));
  const IndexMap f = IndexMap::max_coord(a);
  const Tensor t = random::tensor(rng, a, ScalarKind::GaussianRational);
  for (auto _ : state) benchmark::DoNotOptimize(stretch(t, f));
}
BENCHMARK(BM_Stretch)->DenseRange(2, 5);

void BM_Average(benchmark::State& state) {
  random::Engine rng(3);
  const IndexSet a = cube(state.range(0));
  const IndexMap f = IndexMap::linear(a, {1, -1, 1});
  const Tensor t = random::tensor(rng, a, ScalarKind::GaussianRational);
  for (auto _ : state) benchmark::DoNotOptimize(average(t, f, true));
}
BENCHMARK(BM_Average)->DenseRange(2, 4);

void BM_DetBareiss(benchmark::State& state) {
  random::Engine rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix m = random::matrix(rng, n, n, ScalarKind::GaussianRational);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetBareiss)->RangeMultiplier(2)->Range(4, 32);

void BM_JordanOracle(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const std::vector<JordanSpec> specs = {JordanSpec({{p, Scalar::rational(2)}}), JordanSpec({{p, Scalar::rational(0)}})};
  const DenseMatrix m = nfold_kron_matrix(specs);
  const auto eig = nfold_eigenvalues(specs);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_oracle(m, eig));
}
BENCHMARK(BM_JordanOracle)->DenseRange(2, 6, 2);

void BM_JordanClosedForm(benchmark::State& state) {
  random::Engine rng(5);
  std::vector<JordanSpec> specs;
  for (int f = 0; f < 3; ++f) specs.push_back(random::jordan_spec(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(jordan_nfold(specs));
}
BENCHMARK(BM_JordanClosedForm)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
