#include "stripes/kernels/stripe_field.hpp"

#include "stripes/stripedist.hpp"

namespace stripes::kernels {

std::vector<double> stripe_distance_field(const PeriodicSet& E, int m, double l, double eta, int resolution,
                                          Backend backend) {
  const int d = E.dim();
  const long M = ipow(m, d);
  const double step = E.period() / m;
  std::vector<double> out(M * d);
  auto one = [&](long z) {
    std::vector<int> c(d);
    lattice_coords(z, m, c);
    Cube Q;
    Q.l = l;
    Q.z.resize(d);
    for (int j = 0; j < d; ++j) Q.z[j] = c[j] * step;
    for (int i = 0; i < d; ++i) out[z * d + i] = d_eta_i(E, Q, i, eta, resolution).distance;
  };
  if (backend == Backend::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long z = 0; z < M; ++z) one(z);
  } else {
    for (long z = 0; z < M; ++z) one(z);
  }
  return out;
}

}  // namespace stripes::kernels
