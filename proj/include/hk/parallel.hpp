#pragma once

#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hk {

// Execution strategy for the data-parallel kernels (trend points, grid scans,
// batch sweeps). Each kernel invocation computes fn(i) independently and the
// results land in index order, so both strategies yield identical vectors;
// the serial path is the reference the parallel one is tested against.
enum class Exec { serial, parallel };

template <class R, class Fn>
std::vector<R> indexed_map(int count, Fn&& fn, Exec how = Exec::parallel) {
  std::vector<R> out(static_cast<std::size_t>(count > 0 ? count : 0));
  if (count <= 0) return out;
  if (how == Exec::parallel) {
    std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < count; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  }
  return out;
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hk
