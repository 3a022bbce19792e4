#pragma once

#include <cmath>
#include <limits>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"
#include "roast/transform/basis.hpp"

namespace roast {

/// Finite stand-in for an exact (infinite-SNR) projection in text output.
inline constexpr double kSnrCapDb = 320.0;

/// 20 log10(||x|| / ||x - xhat||). A residual below 1e-15 ||x|| counts as
/// exact and returns +infinity.
inline double snr_db(const CVec& x, const CVec& xhat) {
  const double nx = x.norm();
  detail::require(nx > 0.0, "SNR of a zero signal is undefined");
  detail::require(x.size() == xhat.size(), "SNR: length mismatch");
  const double nr = (x - xhat).norm();
  if (nr < 1e-15 * nx) return std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(nx / nr);
}

template <OrthonormalBasis B>
double residual_snr(const B& basis, const CVec& x) {
  return snr_db(x, project(basis, x));
}

inline double capped_snr(double db) { return std::min(db, kSnrCapDb); }

}  // namespace roast
