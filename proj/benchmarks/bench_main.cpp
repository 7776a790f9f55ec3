#include <benchmark/benchmark.h>

#include <vector>

#include "toric/classes.hpp"
#include "toric/counting.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

// Deterministic dense integer matrix with entries spread over [-range, range].
IntMatrix test_matrix(std::size_t n, long range) {
  IntMatrix a(n, IntVector(n));
  long state = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      state = (state * 48271) % 2147483647;
      a[i][j] = Int(state % (2 * range + 1) - range);
    }
  return a;
}

Fan cube_fan() {
  return build_fan(3,
                   {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                    {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
                   {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                    {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
}

Fan spike_fan(long m) {
  return build_fan(2, {{1, 0}, {0, 1}, {-m, -1}}, {{0, 1}, {1, 2}, {0, 2}});
}

LatticePolytope tall_simplex(long m) {
  return LatticePolytope::build(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, m}});
}

void bm_smith_normal_form(benchmark::State& state) {
  const IntMatrix a = test_matrix(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}

void bm_parallelotope_points(benchmark::State& state) {
  const long m = state.range(0);
  // Index-m^2 sublattice of Z^3: every point enumeration solves in SNF basis.
  const IntMatrix gens{{m, 0, 0}, {1, m, 0}, {0, 1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(parallelotope_points(gens));
}

void bm_todd_cube(benchmark::State& state) {
  const Fan fan = cube_fan();
  for (auto _ : state) benchmark::DoNotOptimize(todd_lrr(fan));
}

void bm_hirzebruch_spike(benchmark::State& state) {
  const Fan fan = spike_fan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hirzebruch_class(fan, true));
}

void bm_identity_battery(benchmark::State& state) {
  const Fan fan = spike_fan(5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(fan));
}

void bm_ehrhart(benchmark::State& state) {
  const LatticePolytope p = tall_simplex(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_via_classes(p));
}

void bm_weighted_count(benchmark::State& state) {
  const LatticePolytope p = tall_simplex(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(weighted_count_identity(p));
}

}  // namespace

BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_parallelotope_points)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_todd_cube);
BENCHMARK(bm_hirzebruch_spike)->Arg(5)->Arg(12)->Arg(30);
BENCHMARK(bm_identity_battery);
BENCHMARK(bm_ehrhart)->Arg(2)->Arg(6);
BENCHMARK(bm_weighted_count);

BENCHMARK_MAIN();
