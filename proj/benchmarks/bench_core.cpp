#include <benchmark/benchmark.h>

#include <array>

#include "poisson_geom/figures.hpp"
#include "poisson_geom/harmonics.hpp"
#include "poisson_geom/identities.hpp"
#include "poisson_geom/rng.hpp"
#include "poisson_geom/surface.hpp"

using namespace poisson_geom;

namespace {

std::array<Vec3, 5> operands(std::uint64_t seed) {
  SplitMix64 rng(seed);
  return {rng.vec_in_cube(), rng.vec_in_cube(), rng.vec_in_cube(),
          rng.vec_in_cube(), rng.vec_in_cube()};
}

void BM_cross_hyperbolic(benchmark::State& state) {
  const auto ops = operands(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross(HYPERBOLIC, ops[0], ops[1]));
  }
}
BENCHMARK(BM_cross_hyperbolic);

void BM_jacobi_residual(benchmark::State& state) {
  const auto ops = operands(2);
  const BracketContext ctx = BracketContext::algebra(AlgebraKind::Quadratic);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_residual(ctx, ops[0], ops[1], ops[2]));
  }
}
BENCHMARK(BM_jacobi_residual);

void BM_tomihisa_residual(benchmark::State& state) {
  const auto ops = operands(3);
  const BracketContext ctx = BracketContext::signature(HYPERBOLIC);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tomihisa_residual(ctx, TomihisaInstance::standard(ops)));
  }
}
BENCHMARK(BM_tomihisa_residual);

void BM_razmyslov1_residual(benchmark::State& state) {
  const auto ops = operands(4);
  const BracketContext ctx = BracketContext::signature(EUCLIDEAN);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        razmyslov1_residual(ctx, ops[0], ops[1], ops[2], ops[3], ops[4]));
  }
}
BENCHMARK(BM_razmyslov1_residual);

void BM_orthocenter(benchmark::State& state) {
  const double s = 0.5773502691896258;
  const Triangle t =
      make_triangle(AlgebraKind::Sphere, {1, 0, 0}, {0, 1, 0}, {s, s, s});
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthocenter(t));
  }
}
BENCHMARK(BM_orthocenter);

void BM_l2_inner(benchmark::State& state) {
  const Harmonic f{AlgebraKind::Sphere, {1, 2, 3}};
  const Harmonic g{AlgebraKind::Sphere, {-2, 0.5, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(l2_inner(f, g));
  }
}
BENCHMARK(BM_l2_inner);

void BM_render_pappus(benchmark::State& state) {
  const FigureSpec spec = FigureSpec::defaults(FigureKind::Pappus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_figure(spec));
  }
}
BENCHMARK(BM_render_pappus);

}  // namespace

BENCHMARK_MAIN();
