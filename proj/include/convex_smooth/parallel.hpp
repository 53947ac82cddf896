#ifndef CONVEX_SMOOTH_PARALLEL_HPP
#define CONVEX_SMOOTH_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace convex_smooth {

// Worker count: min(hardware, 8), capped by CONVEX_SMOOTH_THREADS when set.
inline int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (n > 8) n = 8;
  if (const char* env = std::getenv("CONVEX_SMOOTH_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Static block partition. Results must be written to disjoint slots so the
// outcome is independent of scheduling; reductions happen after the join.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
  const int workers = worker_count();
  if (workers <= 1 || count < 2048) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_PARALLEL_HPP
