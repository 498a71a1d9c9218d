#include <memory>
#include <random>

#include <benchmark/benchmark.h>

#include "ncpart/composition.hpp"

using namespace ncpart;

namespace {

LambdaPtr lambda(const char* spec) { return std::make_shared<const FiniteGroup>(finite_group_from_spec(spec)); }
const GammaPtr kFree1 = std::make_shared<const PointGroup>(group_from_spec("free:1"));

std::vector<ColoredPartition> shapes(const LambdaPtr& l, int k, int n) {
  return enumerate_colored(k, n, identity_colors(k), identity_colors(n), l, kFree1);
}

const char* spec_of(std::int64_t i) { return i == 2 ? "Z2" : i == 3 ? "Z3" : "S3"; }

void BM_Enumerate(benchmark::State& state) {
  const auto l = lambda(spec_of(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(shapes(l, n / 2, n - n / 2));
}
BENCHMARK(BM_Enumerate)->Args({2, 6})->Args({3, 6})->Args({6, 5});

// Structural composition against the entrywise matrix product, on a fixed sample of pairs at one shape.
void run_pairs(benchmark::State& state, bool brute) {
  const auto l = lambda(spec_of(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const auto ps = shapes(l, n, n);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(64);
  for (auto& x : pairs) x = {pick(rng), pick(rng)};
  for (auto _ : state)
    for (const auto& [i, j] : pairs) {
      if (brute)
        benchmark::DoNotOptimize(brute_force_compose(ps[i], ps[j]));
      else
        benchmark::DoNotOptimize(compose(ps[i], ps[j]));
    }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pairs.size()));
}

void BM_Compose(benchmark::State& state) { run_pairs(state, false); }
void BM_BruteForceCompose(benchmark::State& state) { run_pairs(state, true); }
BENCHMARK(BM_Compose)->Args({2, 2})->Args({3, 3})->Args({6, 3});
BENCHMARK(BM_BruteForceCompose)->Args({2, 2})->Args({3, 3})->Args({6, 3});

void BM_ToMatrix(benchmark::State& state) {
  const auto l = lambda(spec_of(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  std::vector<Block> strands;
  for (int i = 1; i <= n; ++i) strands.push_back(Block({i}, {i}));
  const TwoRowPartition p(n, n, strands);
  const ColoredPartition cp(l, kFree1, p, std::vector<Elem>(p.size(), kIdentity), identity_colors(n), identity_colors(n));
  for (auto _ : state) benchmark::DoNotOptimize(to_matrix(cp, 1u << 20));
}
BENCHMARK(BM_ToMatrix)->Args({2, 6})->Args({3, 5})->Args({6, 4});

}  // namespace

BENCHMARK_MAIN();
