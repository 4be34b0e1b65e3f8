#include <benchmark/benchmark.h>

#include <random>

#include "baf/bwb.hpp"
#include "baf/opcalc.hpp"
#include "baf/svariety.hpp"

using namespace baf;

static void BM_BuildE8(benchmark::State& state) {
  for (auto _ : state) {
    auto rs = RootSystem::build("E8");
    benchmark::DoNotOptimize(rs.positive_roots().size());
  }
}
BENCHMARK(BM_BuildE8);

static void BM_EnumerateB4(benchmark::State& state) {
  auto rs = RootSystem::build("B4");
  for (auto _ : state) {
    auto group = enumerate_weyl(rs);
    benchmark::DoNotOptimize(group.size());
  }
}
BENCHMARK(BM_EnumerateB4);

static void BM_StraightenF4(benchmark::State& state) {
  auto rs = RootSystem::build("F4");
  std::mt19937 rng(1);
  std::uniform_int_distribution<long long> dist(-20, 20);
  for (auto _ : state) {
    Weight xi{dist(rng), dist(rng), dist(rng), dist(rng)};
    benchmark::DoNotOptimize(straighten(rs, xi).steps);
  }
}
BENCHMARK(BM_StraightenF4);

static void BM_LineBundleCohomologyB3(benchmark::State& state) {
  auto rs = RootSystem::build("B3");
  std::mt19937 rng(2);
  std::uniform_int_distribution<long long> dist(-10, 10);
  for (auto _ : state) {
    Weight lam{dist(rng), dist(rng), dist(rng)};
    benchmark::DoNotOptimize(line_bundle_cohomology(rs, lam).vanishes);
  }
}
BENCHMARK(BM_LineBundleCohomologyB3);

static void BM_PEtaG2(benchmark::State& state) {
  auto rs = RootSystem::build("G2");
  for (auto _ : state) {
    auto p = p_eta(rs, Weight{2, 1});
    benchmark::DoNotOptimize(p.term_count());
  }
}
BENCHMARK(BM_PEtaG2);

static void BM_Fw0TwistB2(benchmark::State& state) {
  auto rs = RootSystem::build("B2");
  auto w0 = longest_element(rs);
  auto p = p_eta(rs, Weight{2, 2});
  for (auto _ : state) {
    auto t = fw_on_poly(rs, w0, p);
    benchmark::DoNotOptimize(t.term_count());
  }
}
BENCHMARK(BM_Fw0TwistB2);

static void BM_CheckSaturationA3(benchmark::State& state) {
  auto rs = RootSystem::build("A3");
  for (auto _ : state) {
    auto verdict = check_saturation(rs, {Weight{1, 0, 1}}, 128);
    benchmark::DoNotOptimize(verdict.status);
  }
}
BENCHMARK(BM_CheckSaturationA3);

static void BM_HnfRandom8x8(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> dist(-50, 50);
  std::vector<Int> entries(64);
  for (auto& e : entries) e = to_int(dist(rng));
  IntMatrix m(8, 8, entries);
  for (auto _ : state) {
    auto hnf = hermite_normal_form(m);
    benchmark::DoNotOptimize(hnf.h.at(0, 0));
  }
}
BENCHMARK(BM_HnfRandom8x8);

BENCHMARK_MAIN();
