#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nomsel {

// Execution switch for the data-parallel kernels. `serial` is the reference
// path; `parallel` runs the identical per-item computation under OpenMP.
// Both paths write results into index-addressed slots and reduce in a fixed
// order, so they are required (and tested) to be bit-identical.
enum class Exec { serial, parallel };

#ifdef _OPENMP
inline bool use_parallel(Exec e) {
  // No nested teams: a kernel invoked from inside a parallel region runs
  // its chunk serially.
  return e == Exec::parallel && !omp_in_parallel();
}
#else
inline bool use_parallel(Exec) { return false; }
#endif

}  // namespace nomsel
