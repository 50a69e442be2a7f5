// Serial reference versus OpenMP kernel on fixed inputs. The second argument
// of every benchmark selects the execution mode: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mixvol/appendix.hpp"
#include "mixvol/extremality.hpp"
#include "mixvol/hessian.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/smooth.hpp"

using namespace mixvol;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

Polytope random_polytope(std::mt19937_64& rng, int n, int points) {
  std::uniform_int_distribution<int> d(-4, 4);
  while (true) {
    std::vector<RVec> pts;
    for (int i = 0; i < points; ++i) {
      RVec p;
      for (int j = 0; j < n; ++j) p.emplace_back(d(rng));
      pts.push_back(p);
    }
    Polytope p = Polytope::hull(pts, n);
    if (p.dim() == n) return p;
  }
}

std::vector<Polytope> tuple(int n, int count, int points) {
  std::mt19937_64 rng(5);
  std::vector<Polytope> out;
  for (int i = 0; i < count; ++i) out.push_back(random_polytope(rng, n, points));
  return out;
}

PiecewiseAffineConvex random_function(std::mt19937_64& rng, int n, int pieces) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<AffinePiece> ps;
  for (int i = 0; i < pieces; ++i) {
    RVec a;
    for (int j = 0; j < n; ++j) a.emplace_back(d(rng));
    ps.push_back({a, Rational(d(rng))});
  }
  return {std::move(ps), functions::cube_box(n, 4)};
}

void BM_mixed_area_atoms(benchmark::State& state) {
  const auto c = tuple(3, 2, 12);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_area_atoms(c, mode(state)));
}

void BM_mixed_volume_interpolated(benchmark::State& state) {
  const auto c = tuple(3, 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_interpolated(c, mode(state)));
}

void BM_extreme_set(benchmark::State& state) {
  const auto c = tuple(4, 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_set(c, mode(state)));
}

void BM_mixed_hessian_atoms(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const std::vector<PiecewiseAffineConvex> f = {random_function(rng, 2, 6), random_function(rng, 2, 6)};
  for (auto _ : state) benchmark::DoNotOptimize(mixed_hessian_atoms(f, mode(state)));
}

void BM_mixed_ma_residual(benchmark::State& state) {
  const auto f = smooth::registry("crease_f"), g = smooth::registry("crease_g");
  const smooth::Box2 box{{-0.9, -0.9}, {0.9, 0.9}};
  for (auto _ : state) benchmark::DoNotOptimize(smooth::mixed_ma_residual(f, g, box, 100, 100, mode(state)));
}

void BM_dimension_probe(benchmark::State& state) {
  appendix::Params p;
  p.n = 4;
  p.v = {1, 1};
  p.t = 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(appendix::dimension_probe(p, 2000, 1, mode(state)));
}

}  // namespace

BENCHMARK(BM_mixed_area_atoms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mixed_volume_interpolated)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extreme_set)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mixed_hessian_atoms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mixed_ma_residual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dimension_probe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
