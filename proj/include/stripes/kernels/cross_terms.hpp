#pragma once

#include <cstdint>
#include <vector>

#include "stripes/kernels/backend.hpp"

namespace stripes::kernels {

// For every cell c of a cyclic n^d grid:
//   out[c] = sum_m W[m] |b[c + m_i e_i] - b[c]| |b[c + m - m_i e_i] - b[c]|
// i.e. the lattice form of the product of a difference along axis i and a
// difference across it, weighted by the periodized kernel.
std::vector<double> cross_cell_sums(const std::vector<std::uint8_t>& bits, const std::vector<double>& W,
                                    int n, int d, int axis, Backend backend);

}  // namespace stripes::kernels
