// Serial reference loops against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "stripes/kernels/autocorr.hpp"
#include "stripes/kernels/cross_terms.hpp"
#include "stripes/kernels/near_field.hpp"
#include "stripes/kernels/stripe_field.hpp"
#include "stripes/setgeom.hpp"

using namespace stripes;
using namespace stripes::kernels;

namespace {

std::vector<std::uint8_t> bits(long size) {
  std::mt19937 rng(1);
  std::vector<std::uint8_t> b(size);
  for (auto& v : b) v = rng() % 2;
  return b;
}

Backend backend(const benchmark::State& s) { return s.range(1) ? Backend::parallel : Backend::serial; }

void BM_autocorr_direct(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  const auto b = bits(static_cast<long>(n) * n);
  for (auto _ : s) benchmark::DoNotOptimize(autocorrelation_direct(b, n, 2, backend(s)));
}

void BM_autocorr_fft(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  const auto b = bits(static_cast<long>(n) * n);
  for (auto _ : s) benchmark::DoNotOptimize(autocorrelation_fft(b, n, 2));
}

void BM_cross_terms(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  const auto b = bits(static_cast<long>(n) * n);
  std::vector<double> W(b.size(), 1e-3);
  for (auto _ : s) benchmark::DoNotOptimize(cross_cell_sums(b, W, n, 2, 0, backend(s)));
}

void BM_near_field(benchmark::State& s) {
  NearFieldTask t;
  t.d = 2;
  t.n = static_cast<int>(s.range(0));
  t.a = 16.0 / t.n;
  t.t = 0.02;
  t.p = 4.0;
  t.shells = 2;
  for (auto _ : s) benchmark::DoNotOptimize(near_field_weights(t, backend(s)));
}

void BM_stripe_field(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  const auto E = PeriodicSet::from_grid(2, 16.0, n, bits(static_cast<long>(n) * n));
  for (auto _ : s) benchmark::DoNotOptimize(stripe_distance_field(E, 32, 2.0, 0.5, 16, backend(s)));
}

}  // namespace

BENCHMARK(BM_autocorr_direct)->ArgsProduct({{32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_autocorr_fft)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cross_terms)->ArgsProduct({{32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_near_field)->ArgsProduct({{16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stripe_field)->ArgsProduct({{64}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
