#pragma once

#include <cstddef>
#include <utility>

namespace hhbar {

enum class ExecMode { serial, parallel };

// Runs body(i) for i in [0, n). In parallel mode iterations are distributed
// over OpenMP threads; each index is computed by exactly one thread with the
// same per-index arithmetic as the serial loop, so results are bitwise
// identical in both modes.
template <typename Body>
void parallel_for(std::size_t n, ExecMode mode, Body&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace hhbar
