#include <benchmark/benchmark.h>

#include <random>

#include "vortex/adler_moser.hpp"
#include "vortex/correlation.hpp"
#include "vortex/polynomial.hpp"
#include "vortex/rational.hpp"
#include "vortex/refine.hpp"

namespace {

using vortex::Complex;

vortex::VortexConfiguration collinear() {
  return vortex::VortexConfiguration({{{-1, 0}, 1.0}, {{0, 0}, -0.5}, {{1, 0}, 1.0}});
}

vortex::VortexConfiguration ring(int n) {
  std::vector<vortex::Vortex> v;
  for (int k = 0; k < n; ++k) v.push_back({std::polar(1.0, 6.283185307179586 * k / n), 1.0 + 0.1 * k});
  return vortex::VortexConfiguration(std::move(v));
}

void BM_Integrand(benchmark::State& state) {
  const auto c = ring(int(state.range(0)));
  Complex z(0.3, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vortex::integrand(c, z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_Integrand)->Arg(3)->Arg(10)->Arg(30);

void BM_Energy(benchmark::State& state) {
  const auto c = ring(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vortex::energy(c));
}
BENCHMARK(BM_Energy)->Arg(10)->Arg(100);

void BM_CorrelationAEps(benchmark::State& state) {
  const auto c = collinear();
  vortex::QuadratureSpec spec;
  spec.epsilon = 0.2 / double(state.range(0));
  spec.cutoff_radius = 50.0;
  spec.target_abs_error = 1e-5;
  for (auto _ : state) benchmark::DoNotOptimize(vortex::correlation_A_eps(c, spec));
}
BENCHMARK(BM_CorrelationAEps)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PairIntegral(benchmark::State& state) {
  vortex::QuadratureSpec spec;
  spec.cutoff_radius = 100.0;
  spec.target_abs_error = 1e-6;
  for (auto _ : state) benchmark::DoNotOptimize(vortex::pair_integral(0.0, 1.0, 0.1, spec));
}
BENCHMARK(BM_PairIntegral)->Unit(benchmark::kMillisecond);

void BM_Roots(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  std::vector<Complex> r;
  for (int i = 0; i < state.range(0); ++i) r.emplace_back(normal(rng), normal(rng));
  const auto p = vortex::Polynomial::from_roots(r);
  for (auto _ : state) benchmark::DoNotOptimize(vortex::roots(p, 1e-14));
}
BENCHMARK(BM_Roots)->Arg(8)->Arg(21)->Arg(55);

void BM_AdlerMoserRefine(benchmark::State& state) {
  const std::vector<Complex> params{1.0, 1.0};
  const auto exact = vortex::config_from_adler_moser(vortex::adler_moser_chain(3, params));
  std::vector<vortex::Vortex> jittered(exact.begin(), exact.end());
  for (std::size_t i = 0; i < jittered.size(); ++i) jittered[i].position += std::polar(1e-4, 2.0 * double(i));
  const vortex::VortexConfiguration config(std::move(jittered));
  std::vector<std::size_t> all(config.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(vortex::refine_equilibrium(config, all, {50, 1e-13, 1.0}));
}
BENCHMARK(BM_AdlerMoserRefine);

}  // namespace

BENCHMARK_MAIN();
