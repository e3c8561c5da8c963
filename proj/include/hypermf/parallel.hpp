#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypermf {

// Global worker cap (0 = library default). Output must not depend on this:
// every parallel loop writes to disjoint slots and reductions run serially
// in index order afterwards.
void set_max_threads(int k);
int max_threads();

// Parallel loop over [0, count). Body must only touch per-index state.
template <class Fn>
void parallel_for(std::ptrdiff_t count, Fn&& fn) {
#ifdef _OPENMP
  const int cap = max_threads();
#pragma omp parallel for schedule(static) num_threads(cap > 0 ? cap : omp_get_max_threads())
  for (std::ptrdiff_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
#else
  for (std::ptrdiff_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
#endif
}

// Serial twin, kept for A/B testing against the OpenMP path.
template <class Fn>
void serial_for(std::ptrdiff_t count, Fn&& fn) {
  for (std::ptrdiff_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

}  // namespace hypermf
