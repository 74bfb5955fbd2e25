#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace waldron {

/// Worker count: WALDRON_THREADS env var when set (>0), else the hardware
/// concurrency (at least 1).
inline int thread_count() {
  if (const char* env = std::getenv("WALDRON_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Run fn(item) for item = 0..n_items-1 across `threads` workers (0 = auto).
/// Items are claimed through an atomic counter; callers make reductions
/// deterministic by storing per-item results and combining them in item
/// order afterwards.  The first exception thrown is rethrown to the caller.
template <class Fn>
void parallel_for(std::int64_t n_items, Fn&& fn, int threads = 0) {
  if (n_items <= 0) return;
  if (threads <= 0) threads = thread_count();
  threads = static_cast<int>(std::min<std::int64_t>(threads, n_items));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < n_items; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n_items) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace waldron
