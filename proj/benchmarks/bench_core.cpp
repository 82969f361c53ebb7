// Microbenchmarks for the hot numerical kernels: the gamma layer, the
// Barnes quadrature engine, and the special-function evaluations built on
// them.

#include <benchmark/benchmark.h>

#include "wmb/barnes.hpp"
#include "wmb/concurrency.hpp"
#include "wmb/hypergeom.hpp"
#include "wmb/kernel.hpp"
#include "wmb/theta.hpp"
#include "wmb/whittaker.hpp"
#include "wmb/wilson.hpp"

using wmb::Complex;

static void BM_LogGamma(benchmark::State& state) {
  Complex z(0.25, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmb::log_gamma(z));
    z += Complex(0.0, 1e-6);
  }
}
BENCHMARK(BM_LogGamma);

static void BM_LogGammaHighImag(benchmark::State& state) {
  Complex z(0.25, 60.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmb::log_gamma(z));
    z += Complex(0.0, 1e-6);
  }
}
BENCHMARK(BM_LogGammaHighImag);

static void BM_SinPi(benchmark::State& state) {
  Complex z(0.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmb::sin_pi(z));
    z += Complex(1e-6, 0.0);
  }
}
BENCHMARK(BM_SinPi);

static void BM_EvalIntegrand(benchmark::State& state) {
  wmb::BarnesIntegrand f;
  f.add_num(0.7, 1).add_num(0.9, 1).add_num(0.6, -1).add_num(0.8, -1);
  double h = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval(Complex(0.0, 3.0 + h)));
    h += 1e-6;
  }
}
BENCHMARK(BM_EvalIntegrand);

static void BM_BarnesLemmaIntegral(benchmark::State& state) {
  wmb::BarnesIntegrand f;
  f.add_num(0.7, 1).add_num(0.9, 1).add_num(0.6, -1).add_num(0.8, -1);
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate(f, wmb::Contour{0.0, {}}, tol));
}
BENCHMARK(BM_BarnesLemmaIntegral)->Arg(6)->Arg(9)->Arg(12);

static void BM_WilsonPhi(benchmark::State& state) {
  wmb::WilsonParams p;
  p.a = Complex(0.75, 1.3);
  p.b = Complex(0.25, 0.8);
  p.c = Complex(0.25, -0.8);
  p.d = Complex(0.75, -1.3);
  p.lambda = Complex(0, 1) * (0.5 - Complex(0.49, 0.6));
  p.x = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(wilson_phi(p, 1e-8));
}
BENCHMARK(BM_WilsonPhi);

static void BM_WhittakerContour(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        wmb::whittaker_w({1.0, Complex(0, 0.8), 2.6}, 1e-10));
}
BENCHMARK(BM_WhittakerContour);

static void BM_WhittakerSeries(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        wmb::whittaker_w({1.0, Complex(0, 0.8), 0.18}, 1e-10));
}
BENCHMARK(BM_WhittakerSeries);

static void BM_JacobiKernel(benchmark::State& state) {
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmb::jacobi_kernel(0.7, u));
    u = u < 40.0 ? u * 1.1 : 0.1;
  }
}
BENCHMARK(BM_JacobiKernel);

static void BM_CdhPoly(benchmark::State& state) {
  const wmb::HahnParams p(0.25, Complex(0.25, -0.9), Complex(0.25, 0.9));
  for (auto _ : state)
    benchmark::DoNotOptimize(wmb::cdh_poly(state.range(0), 1.44, p));
}
BENCHMARK(BM_CdhPoly)->Arg(5)->Arg(20);

static void BM_ThetaLatticeSums(benchmark::State& state) {
  const wmb::UpperHalfPoint z{0.3, 1.1};
  const double bound = wmb::g_sum_bound(z);
  for (auto _ : state) benchmark::DoNotOptimize(wmb::f_g_sums(z, 1, bound));
}
BENCHMARK(BM_ThetaLatticeSums);

static void BM_KernelValue(benchmark::State& state) {
  const wmb::ChiSpec chi = wmb::ChiSpec::gaussian(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(wmb::k_chi(2.5, chi, 1e-8));
}
BENCHMARK(BM_KernelValue);

BENCHMARK_MAIN();
