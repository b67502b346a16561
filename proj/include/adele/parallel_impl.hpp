#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adele::exec {

template <class T, class F>
void fill_indexed(std::vector<T>& out, std::size_t n, F&& f, bool parallel) {
  out.resize(n);
#ifdef _OPENMP
  if (parallel && n > 1) {
    const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
}

}  // namespace adele::exec
