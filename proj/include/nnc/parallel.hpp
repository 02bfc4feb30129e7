#pragma once

#include <cstdint>

namespace nnc {

// Global worker cap used by the OpenMP kernels (0 = runtime default).
// Every kernel must produce bit-identical output for any cap, which is why
// all randomness is counter-split per work item and reductions are
// order-independent integer sums or index-tie-broken maxima.
void set_thread_cap(int n);
int thread_cap();
int effective_threads();

}  // namespace nnc
