#pragma once

#include <cstdint>
#include <vector>

#include "stripes/kernels/backend.hpp"

namespace stripes::kernels {

// A[m] = #{c : b[c] = 1 and b[c + m] = 1} on the cyclic lattice of side n.
std::vector<std::int64_t> autocorrelation_direct(const std::vector<std::uint8_t>& bits, int n, int d,
                                                 Backend backend);

// Same counts through a real-to-complex transform, rounded to integers.
std::vector<std::int64_t> autocorrelation_fft(const std::vector<std::uint8_t>& bits, int n, int d);

}  // namespace stripes::kernels
