#include <benchmark/benchmark.h>

#include "orbitcone/invariants.hpp"

using namespace orbitcone;

namespace {

Weight fw(const RootSystem& rs, int j) {
  Vec f = zero_vec(rs.rank());
  f[j - 1] = 1;
  return rs.weight_from_fund(f);
}

void BM_WeylOrbit(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Series::B, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rs.weyl_orbit(rs.rho()));
}

void BM_ZeroInConv(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Series::A, static_cast<int>(state.range(0)));
  auto orbit = rs.weyl_orbit(rs.rho());
  for (auto _ : state) benchmark::DoNotOptimize(zero_in_conv(orbit));
}

void BM_MinZeroSubset(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Series::A, static_cast<int>(state.range(0)));
  Weight lam = fw(rs, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(min_zero_subset(rs, lam, rs.rank() + 1));
}

void BM_DominantCharacter(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Series::D, 4);
  FundVec lam(4, static_cast<long long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dominant_character(rs, lam));
}

void BM_TensorDecompose(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Series::B, 3);
  FundVec lam{1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(rs, lam, lam));
}

void BM_R0(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Series::A, static_cast<int>(state.range(0)));
  Weight lam = fw(rs, 2);
  for (auto _ : state) benchmark::DoNotOptimize(r0(rs, lam));
}

}  // namespace

BENCHMARK(BM_WeylOrbit)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_ZeroInConv)->Arg(3)->Arg(4);
BENCHMARK(BM_MinZeroSubset)->Arg(4)->Arg(6);
BENCHMARK(BM_DominantCharacter)->Arg(1)->Arg(2);
BENCHMARK(BM_TensorDecompose);
BENCHMARK(BM_R0)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
