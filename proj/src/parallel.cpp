#include "mvlab/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mvlab {

int thread_cap() {
  const char* env = std::getenv("MVLAB_THREADS");
  if (env == nullptr) return 0;
  const int v = std::atoi(env);
  return v > 0 ? v : 0;
}

void apply_thread_cap() {
#ifdef _OPENMP
  const int cap = thread_cap();
  if (cap > 0) omp_set_num_threads(cap);
#endif
}

}  // namespace mvlab
