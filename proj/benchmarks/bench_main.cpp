#include <random>

#include <benchmark/benchmark.h>

#include "regkt/envelope.hpp"
#include "regkt/multiplier.hpp"
#include "regkt/stallings.hpp"
#include "regkt/zlattice.hpp"

using namespace regkt;

static void BM_FoldJFBasis(benchmark::State& state) {
  Envelope env(catalog::symmetric(std::size_t(state.range(0))));
  auto basis = env.jf_basis();
  for (auto _ : state) benchmark::DoNotOptimize(SubgroupGraph::build(basis).num_states());
  state.SetLabel(std::to_string(basis.size()) + " words");
}
BENCHMARK(BM_FoldJFBasis)->Arg(3)->Arg(4);

static void BM_SmithDiagonal(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  std::mt19937_64 rng(7);
  DenseMatrix m(n, DenseRow(n));
  for (auto& row : m)
    for (auto& x : row) x = long(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(smith_diagonal(m, n));
}
BENCHMARK(BM_SmithDiagonal)->Arg(8)->Arg(16)->Arg(32);

static void BM_KJ2(benchmark::State& state) {
  const std::vector<FiniteGroup> groups{catalog::elementary_abelian2(2), catalog::dihedral(4),
                                        catalog::alternating(4), catalog::symmetric(4)};
  const auto& g = groups.at(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kj2(g, Subgroup::whole(g)).structure);
  state.SetLabel("|F| = " + std::to_string(g.order()));
}
BENCHMARK(BM_KJ2)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_RelativeKJ2(benchmark::State& state) {
  auto a4 = catalog::alternating(4);
  auto v4 = derived_subgroup(a4);
  for (auto _ : state) benchmark::DoNotOptimize(kj2(a4, v4).structure);
}
BENCHMARK(BM_RelativeKJ2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
