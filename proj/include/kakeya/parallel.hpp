#pragma once
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace kakeya {

inline bool openmp_enabled() {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

// Runs fn(i) for i in [0, n).  jobs == 1 (the default everywhere) runs the
// plain serial loop; jobs == 0 lets the OpenMP runtime pick.  Results must
// be written to disjoint slots so the outcome is independent of jobs.
template <class Fn>
void parallel_for(int64_t n, int jobs, Fn&& fn) {
#if defined(_OPENMP)
  if (jobs != 1 && n > 1) {
    if (jobs > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
      for (int64_t i = 0; i < n; ++i) fn(i);
    } else {
#pragma omp parallel for schedule(dynamic, 16)
      for (int64_t i = 0; i < n; ++i) fn(i);
    }
    return;
  }
#endif
  for (int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace kakeya
