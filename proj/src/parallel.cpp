#include "adele/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adele::exec {

namespace {

int runtime_default() {
#ifdef _OPENMP
  return std::max(1, omp_get_max_threads());
#else
  return 1;
#endif
}

int env_cap() {
  const char* v = std::getenv("ADELE_ZETA_THREADS");
  if (!v) return 0;
  const long k = std::strtol(v, nullptr, 10);
  return k > 0 ? static_cast<int>(k) : 0;
}

std::atomic<int> g_cap{-1};  // -1 = uninitialized, 0 = default

}  // namespace

int max_threads() {
  int cap = g_cap.load(std::memory_order_relaxed);
  if (cap < 0) {
    cap = env_cap();
    g_cap.store(cap, std::memory_order_relaxed);
  }
  const int def = runtime_default();
  return cap > 0 ? std::min(cap, def) : def;
}

void set_max_threads(int cap) { g_cap.store(cap > 0 ? cap : 0, std::memory_order_relaxed); }

}  // namespace adele::exec
