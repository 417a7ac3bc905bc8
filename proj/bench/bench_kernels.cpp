// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "phasespace/factorize_kernel.hpp"
#include "phasespace/serial_reference.hpp"
#include "phasespace/star.hpp"
#include "phasespace/wigner.hpp"

using namespace phasespace;

namespace {

KernelMatrix random_kernel(int n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> N01;
  KernelMatrix K = KernelMatrix::zeros(make_grid(n, std::sqrt(std::numbers::pi / n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) K.entries(i, j) = {N01(rng), N01(rng)};
  return K;
}

PhaseFunction bump(const GridSpec& g) {
  return PhaseFunction::sample(g, [](double q, double p) { return cplx(std::exp(-q * q - 0.5 * p * p), 0.0); });
}

RFunction gaussian_R_function() {
  const GaussianAlphaSpec s{1.0, 1.0, 1};
  return RFunction::analytic([s](double u, double v, double up, double vp) { return gaussian_R(s, u, v, up, vp); },
                             GaussianDecay{1.0, 1.0});
}

void BM_Wigner_Parallel(benchmark::State& st) {
  const KernelMatrix K = random_kernel(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(weyl_wigner(K));
}
void BM_Wigner_Serial(benchmark::State& st) {
  const KernelMatrix K = random_kernel(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::weyl_wigner(K));
}

void BM_AlphaKernel_Parallel(benchmark::State& st) {
  const GridSpec g = make_grid(16, 0.5);
  const PhaseFunction A = bump(g);
  const AlphaAxes ax = make_alpha_axes(int(st.range(0)), 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(alpha_kernel_from_A(A, ax));
}
void BM_AlphaKernel_Serial(benchmark::State& st) {
  const GridSpec g = make_grid(16, 0.5);
  const PhaseFunction A = bump(g);
  const AlphaAxes ax = make_alpha_axes(int(st.range(0)), 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(reference::alpha_kernel_direct(A, ax));
}

void BM_Autv_Parallel(benchmark::State& st) {
  const RFunction R = gaussian_R_function();
  AutvOptions opt;
  opt.probes_per_axis = int(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(autv_residual(R, opt));
}
void BM_Autv_Serial(benchmark::State& st) {
  const RFunction R = gaussian_R_function();
  AutvOptions opt;
  opt.probes_per_axis = int(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::autv_residual(R, opt));
}

void BM_Star(benchmark::State& st) {
  const KernelMatrix K = random_kernel(int(st.range(0)));
  const PhaseFunction A = weyl_wigner(K);
  for (auto _ : st) benchmark::DoNotOptimize(star(A, A));
}

}  // namespace

BENCHMARK(BM_Wigner_Parallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wigner_Serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaKernel_Parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaKernel_Serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Autv_Parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Autv_Serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Star)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
