#ifndef GSTONE_PARALLEL_HPP_
#define GSTONE_PARALLEL_HPP_

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gstone::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace gstone::par

#endif  // GSTONE_PARALLEL_HPP_
