#include <benchmark/benchmark.h>

#include <omp.h>

#include "hypercurv/quadrature.hpp"
#include "hypercurv/shapes.hpp"

namespace {

using namespace hypercurv;

Shape bench_shape(int n) {
  ShapeSpec spec;
  spec.name = "geodesic_sphere_s";
  spec.n = n;
  spec.k = 1.0;
  spec.rho = 1.0;
  return make_shape(spec);
}

// q^2 G style integrand with two terms so the per-node work resembles a check.
const Integrand kIntegrand = [](const SurfaceSample& s, std::span<double> out) {
  const double q = s.geometry.jet.x[0];
  out[0] = q * q * s.K.back();
  out[1] = s.K.back();
};

void BM_Serial(benchmark::State& state) {
  const Shape shape = bench_shape(static_cast<int>(state.range(0)));
  const int nodes = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_terms_serial(shape, kIntegrand, 2, nodes, kDefaultMaxPoints));
  }
}

void BM_Parallel(benchmark::State& state) {
  const Shape shape = bench_shape(static_cast<int>(state.range(0)));
  const int nodes = static_cast<int>(state.range(1));
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_terms(shape, kIntegrand, 2, nodes, kDefaultMaxPoints));
  }
}

}  // namespace

BENCHMARK(BM_Serial)->Args({2, 96})->Args({4, 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Args({2, 96})->Args({4, 16})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
