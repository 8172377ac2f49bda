// Serial reference loops against the OpenMP kernels, same inputs.
#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdio>
#include <complex>
#include <vector>

#include "wdst/kernels.hpp"

namespace {

using wdst::kernels::cplx;

struct Inputs {
  std::vector<cplx> a, b;
  std::vector<double> phase;
  explicit Inputs(std::size_t n) : a(n), b(n), phase(n) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(n);
      a[i] = {std::cos(7.0 * x), std::sin(3.0 * x)};
      b[i] = {x, 1.0 - x};
      phase[i] = 50.0 * x * x;
    }
  }
};

template <bool Parallel>
void apply_phase(benchmark::State& state) {
  Inputs in(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel)
      wdst::kernels::parallel::apply_phase(in.a, in.phase, 1e-3);
    else
      wdst::kernels::serial::apply_phase(in.a, in.phase, 1e-3);
    benchmark::DoNotOptimize(in.a.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void inner(benchmark::State& state) {
  Inputs in(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const cplx r = Parallel ? wdst::kernels::parallel::inner(in.a, in.b) : wdst::kernels::serial::inner(in.a, in.b);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void norm_sq(benchmark::State& state) {
  Inputs in(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const double r = Parallel ? wdst::kernels::parallel::norm_sq(in.a) : wdst::kernels::serial::norm_sq(in.a);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void multiply(benchmark::State& state) {
  Inputs in(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel)
      wdst::kernels::parallel::multiply(in.a, in.b);
    else
      wdst::kernels::serial::multiply(in.a, in.b);
    benchmark::DoNotOptimize(in.a.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(apply_phase<false>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);
BENCHMARK(apply_phase<true>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);
BENCHMARK(inner<false>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);
BENCHMARK(inner<true>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);
BENCHMARK(norm_sq<false>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);
BENCHMARK(norm_sq<true>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);
BENCHMARK(multiply<false>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);
BENCHMARK(multiply<true>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);

int main(int argc, char** argv) {
  if (!wdst::kernels::configure_threads_from_env()) {
    std::fprintf(stderr, "WDST_THREADS must be a positive integer\n");
    return 2;
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 2;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
