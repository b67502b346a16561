#pragma once

// Thread-count control and the fill/reduce pattern used by the parallel
// kernels.  Every parallel kernel in this library writes independent slots
// of a preallocated array and reduces serially afterwards, so results are
// bit-identical to the serial reference regardless of thread count.

#include <cstddef>
#include <vector>

namespace adele::exec {

// Effective thread cap.  Defaults to the OpenMP runtime default, clamped by
// the ADELE_ZETA_THREADS environment variable (read once at first use).
int max_threads();

// Override the cap programmatically (CLI --threads, tests).  cap <= 0 resets
// to the environment/runtime default.
void set_max_threads(int cap);

// Parallel index map: out[i] = f(i) for i in [0, n).  Deterministic: slots
// are independent, no reduction happens inside.  Serial when `parallel` is
// false or OpenMP is unavailable.
template <class T, class F>
void fill_indexed(std::vector<T>& out, std::size_t n, F&& f, bool parallel = true);

}  // namespace adele::exec

#include "adele/parallel_impl.hpp"
