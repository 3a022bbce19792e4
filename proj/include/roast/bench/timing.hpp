#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

namespace roast {

/// Median wall time of one call over `samples` warm samples. Each sample
/// repeats the call enough times to last at least `min_sample_seconds`, so
/// sub-microsecond calls are still resolved by the monotonic clock.
template <class F>
double median_seconds(F&& call, int samples = 20, double min_sample_seconds = 1e-4) {
  using clock = std::chrono::steady_clock;
  call();  // warm-up
  long reps = 1;
  for (;;) {
    const auto t0 = clock::now();
    for (long i = 0; i < reps; ++i) call();
    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
    if (dt >= min_sample_seconds || reps >= (1L << 30)) break;
    reps = dt <= 0.0 ? reps * 16 : std::max(reps * 2, static_cast<long>(std::ceil(reps * 1.2 * min_sample_seconds / dt)));
  }
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (auto& s : t) {
    const auto t0 = clock::now();
    for (long i = 0; i < reps; ++i) call();
    s = std::chrono::duration<double>(clock::now() - t0).count() / static_cast<double>(reps);
  }
  std::nth_element(t.begin(), t.begin() + samples / 2, t.end());
  double median = t[static_cast<std::size_t>(samples / 2)];
  if (samples % 2 == 0) {
    const double lower = *std::max_element(t.begin(), t.begin() + samples / 2);
    median = 0.5 * (median + lower);
  }
  return median;
}

/// Wall time of a single call.
template <class F>
double once_seconds(F&& call) {
  const auto t0 = std::chrono::steady_clock::now();
  call();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace roast
