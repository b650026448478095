#pragma once

namespace stripes::kernels {

// serial: single-threaded reference loops. parallel: OpenMP loops with the
// same per-output arithmetic, so both produce identical bits.
enum class Backend { serial, parallel };

}  // namespace stripes::kernels
