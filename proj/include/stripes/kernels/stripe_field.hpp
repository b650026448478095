#pragma once

#include <vector>

#include "stripes/kernels/backend.hpp"
#include "stripes/setgeom.hpp"

namespace stripes::kernels {

// D^i_eta(E, Q_l(z)) for every z on the m^d grid z = k L/m; output index
// z_flat * d + i.
std::vector<double> stripe_distance_field(const PeriodicSet& E, int m, double l, double eta, int resolution,
                                          Backend backend);

}  // namespace stripes::kernels
