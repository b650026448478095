#include "stripes/kernels/autocorr.hpp"

#include <fftw3.h>

#include <cmath>

#include "stripes/setgeom.hpp"

namespace stripes::kernels {

std::vector<std::int64_t> autocorrelation_direct(const std::vector<std::uint8_t>& bits, int n, int d,
                                                 Backend backend) {
  const long N = ipow(n, d);
  std::vector<long> on;
  for (long c = 0; c < N; ++c)
    if (bits[c]) on.push_back(c);
  std::vector<std::int64_t> A(N, 0);
  auto one = [&](long m) {
    std::vector<int> cm(d), cc(d);
    lattice_coords(m, n, cm);
    std::int64_t cnt = 0;
    for (long c : on) {
      lattice_coords(c, n, cc);
      for (int j = 0; j < d; ++j) cc[j] += cm[j];
      cnt += bits[lattice_index(cc, n)];
    }
    A[m] = cnt;
  };
  if (backend == Backend::parallel) {
#pragma omp parallel for schedule(static)
    for (long m = 0; m < N; ++m) one(m);
  } else {
    for (long m = 0; m < N; ++m) one(m);
  }
  return A;
}

std::vector<std::int64_t> autocorrelation_fft(const std::vector<std::uint8_t>& bits, int n, int d) {
  const long N = ipow(n, d);
  const long half = N / n * (n / 2 + 1);
  double* in = fftw_alloc_real(N);
  fftw_complex* out = fftw_alloc_complex(half);
  std::vector<int> dims(d, n);
  fftw_plan fwd = fftw_plan_dft_r2c(d, dims.data(), in, out, FFTW_ESTIMATE);
  fftw_plan bwd = fftw_plan_dft_c2r(d, dims.data(), out, in, FFTW_ESTIMATE);
  for (long c = 0; c < N; ++c) in[c] = bits[c];
  fftw_execute(fwd);
  for (long k = 0; k < half; ++k) {
    out[k][0] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
    out[k][1] = 0.0;
  }
  fftw_execute(bwd);
  std::vector<std::int64_t> A(N);
  for (long c = 0; c < N; ++c) A[c] = std::llround(in[c] / N);
  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);
  fftw_free(in);
  fftw_free(out);
  return A;
}

}  // namespace stripes::kernels
