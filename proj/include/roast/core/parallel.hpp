#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace roast {

/// Worker count: ROAST_THREADS if set to a positive integer, else the
/// hardware concurrency, at least 1.
inline unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ROAST_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

/// Calls body(i) for i in [0, count). Each index is handled exactly once and
/// results should go to per-index slots, so output never depends on the
/// schedule. The first exception thrown by any body is rethrown.
template <class Body>
void parallel_for(long count, Body&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<long>(thread_count(), std::max(count, 1L)));
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace roast
