#pragma once

#include <memory>
#include <vector>

#include "stripes/kernels/backend.hpp"
#include "stripes/params.hpp"

namespace stripes {

struct QuadratureSpec {
  double zeta_cutoff = 1.0;     // near zone reaches at least this l1 radius
  int periodization_terms = 4;  // shells of period blocks integrated directly
  int grid_n = 64;              // raster resolution for box sets
  double tol = 1e-9;
};

// W[m] = integral over R^d of K_tau times the L-periodic multilinear hat
// function centred on lattice node m a. For any function g that is
// multilinear between the nodes of the a-lattice, int K g = sum_m g(m a) W[m].
struct LatticeWeights {
  int d = 1;
  int n = 0;
  double L = 0.0;
  std::vector<double> w;
  double mass = 0.0;         // sum of w
  double error_bound = 0.0;  // quadrature plus truncated multipole series
  int far_order = 0;
};

std::shared_ptr<const LatticeWeights> lattice_weights(const ModelParams& m, double L, int n,
                                                      const QuadratureSpec& quad,
                                                      kernels::Backend backend = kernels::Backend::parallel);

// Same without the process-wide cache.
LatticeWeights compute_lattice_weights(const ModelParams& m, double L, int n, const QuadratureSpec& quad,
                                       kernels::Backend backend);

}  // namespace stripes
