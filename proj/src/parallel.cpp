#include "nnc/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nnc {

namespace {
int g_cap = 0;
}

void set_thread_cap(int n) { g_cap = n < 0 ? 0 : n; }

int thread_cap() { return g_cap; }

int effective_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (g_cap > 0 && g_cap < n) n = g_cap;
  return n;
#else
  return 1;
#endif
}

}  // namespace nnc
