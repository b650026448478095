#pragma once

#include <vector>

#include "stripes/kernels/backend.hpp"

namespace stripes::kernels {

struct NearFieldTask {
  int d = 1;
  int n = 4;       // cells per period
  double a = 1.0;  // cell size, period L = n a
  double t = 0.0;  // kernel offset, K = (|z|_1 + t)^-p
  double p = 3.0;
  int shells = 4;  // blocks [kL,(k+1)L)^d with orthant shell index < shells
  double rel_tol = 1e-15;
};

// Integrals of K against the periodized multilinear hat functions, restricted
// to the near blocks. Result indexed by flat lattice index mod n.
std::vector<double> near_field_weights(const NearFieldTask& task, Backend backend);

}  // namespace stripes::kernels
