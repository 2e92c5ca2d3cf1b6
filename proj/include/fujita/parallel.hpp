#pragma once

// Static-partition parallel loop. Work item i always computes the same value
// regardless of thread count; callers reduce over an indexed output buffer,
// so results are reproducible. Thread count: FUJITA_THREADS env, default
// hardware concurrency.

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fujita {

inline int thread_count() {
  if (const char* env = std::getenv("FUJITA_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, int n_threads = 0) {
  if (n == 0) return;
  const int workers = std::max(1, std::min<int>(n_threads > 0 ? n_threads : thread_count(),
                                                static_cast<int>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace fujita
