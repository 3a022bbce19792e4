#pragma once

#include <algorithm>
#include <vector>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"

namespace roast {

/// Partition of the N DFT bins into the 2L+1 lowest frequencies |k| <= L,
/// L = floor(NW), and the complement. Both lists hold wrapped bin indices in
/// 0..N-1, ordered by signed frequency.
struct DftBandSplit {
  long n = 0;
  double w = 0.0;
  long half_band = 0;  // L
  std::vector<long> low_indices;
  std::vector<long> high_indices;

  long low_size() const noexcept { return static_cast<long>(low_indices.size()); }
  long high_size() const noexcept { return static_cast<long>(high_indices.size()); }

  /// Rows of a spectrum restricted to `indices`.
  static CVec gather(const CVec& spectrum, const std::vector<long>& indices) {
    CVec out(static_cast<Index>(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) out(static_cast<Index>(i)) = spectrum(indices[i]);
    return out;
  }

  static void scatter(const CVec& values, const std::vector<long>& indices, CVec& spectrum) {
    for (std::size_t i = 0; i < indices.size(); ++i) spectrum(indices[i]) = values(static_cast<Index>(i));
  }
};

inline long half_band_size(long n, double w) { return detail::floor_snap(static_cast<double>(n) * w); }

inline DftBandSplit build_band_split(long n, double w) {
  detail::require(n >= 1, "band split needs n >= 1");
  detail::require(w > 0.0 && w < 0.5, "half-bandwidth w must lie in (0, 1/2)");
  const long half = half_band_size(n, w);
  detail::require(2 * half + 1 <= n, "band too wide: 2*floor(n*w)+1 exceeds n");

  DftBandSplit s;
  s.n = n;
  s.w = w;
  s.half_band = half;
  std::vector<bool> in_low(static_cast<std::size_t>(n), false);
  for (long k = -half; k <= half; ++k) {
    const long bin = ((k % n) + n) % n;
    s.low_indices.push_back(bin);
    in_low[static_cast<std::size_t>(bin)] = true;
  }
  for (long k = 0; k < n; ++k) {
    if (!in_low[static_cast<std::size_t>(k)]) s.high_indices.push_back(k);
  }
  std::stable_sort(s.high_indices.begin(), s.high_indices.end(),
                   [n](long a, long b) { return signed_bin(a, n) < signed_bin(b, n); });
  return s;
}

}  // namespace roast
