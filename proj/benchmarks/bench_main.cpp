#include <benchmark/benchmark.h>

#include "orbitope/faces.hpp"
#include "orbitope/harness.hpp"
#include "orbitope/orbitope.hpp"
#include "orbitope/reps.hpp"

namespace {

using namespace orbitope;

AlgebraFamily family_for(int which) {
  switch (which) {
    case 0: return AlgebraFamily::sl_r(4);
    case 1: return AlgebraFamily::so_mn(3, 2);
    default: return AlgebraFamily::sl_h(2);
  }
}

void BM_BuildPencils(benchmark::State& state) {
  const AlgebraFamily f = family_for(static_cast<int>(state.range(0)));
  Rng rng = stream_rng(7, 0);
  const PointP x = random_point(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_pencils(x));
  state.SetLabel(f.name());
}
BENCHMARK(BM_BuildPencils)->DenseRange(0, 2);

void BM_Member(benchmark::State& state) {
  const AlgebraFamily f = family_for(static_cast<int>(state.range(0)));
  Rng rng = stream_rng(7, 1);
  const PointP x = random_point(f, rng);
  const PointP y = random_point(f, rng, 0.5);
  MembershipOptions opts;
  opts.matrix_check = false;
  for (auto _ : state) benchmark::DoNotOptimize(member(x, y, opts));
  state.SetLabel(f.name());
}
BENCHMARK(BM_Member)->DenseRange(0, 2);

void BM_PencilFeasibility(benchmark::State& state) {
  const AlgebraFamily f = family_for(static_cast<int>(state.range(0)));
  Rng rng = stream_rng(7, 2);
  const PointP x = random_point(f, rng);
  const PointP y = random_point(f, rng, 0.5);
  const auto pencils = build_pencils(x);
  for (auto _ : state) benchmark::DoNotOptimize(pencils_min_eigenvalue(pencils, y.coords()));
  state.SetLabel(f.name());
}
BENCHMARK(BM_PencilFeasibility)->DenseRange(0, 2);

void BM_EnumerateFaces(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Vec a(n);
  for (int i = 0; i < n; ++i) a(i) = n - i;
  const ChamberPoint anchor = make_chamber_point(AlgebraFamily::so_mn(n + 1, n), a);
  const MomentumPolytope poly = momentum_polytope(anchor);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_faces(poly));
  state.counters["vertices"] = static_cast<double>(poly.vertices.size());
}
BENCHMARK(BM_EnumerateFaces)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_CompoundMatrix(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  CMat M = CMat::Random(N, N);
  M = (M + M.adjoint()).eval();
  for (auto _ : state) benchmark::DoNotOptimize(compound_matrix(M, N / 2));
  state.SetLabel("p = N/2");
}
BENCHMARK(BM_CompoundMatrix)->DenseRange(4, 8, 2);

}  // namespace
BENCHMARK_MAIN();
