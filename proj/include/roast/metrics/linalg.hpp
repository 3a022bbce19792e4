#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"

namespace roast {

inline constexpr long kDenseNormLimit = 2048;

/// Singular values, descending.
inline RVec singular_values(const CMat& a) {
  if (a.size() == 0) return RVec();
  Eigen::BDCSVD<CMat> svd(a);
  return svd.singularValues();
}

/// Largest singular value: dense SVD when both dimensions are at most 2048,
/// power iteration on A*A otherwise (relative tolerance 1e-10, at most 5000
/// steps).
inline double spectral_norm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() <= kDenseNormLimit && a.cols() <= kDenseNormLimit) return singular_values(a)(0);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> normal;
  CVec v(a.cols());
  for (Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 5000; ++it) {
    CVec u = a * v;
    CVec next = a.adjoint() * u;
    const double nn = next.norm();
    if (nn == 0.0) return 0.0;
    const double estimate = std::sqrt(nn);
    v = next / nn;
    if (std::abs(estimate - sigma) <= 1e-10 * estimate) return estimate;
    sigma = estimate;
  }
  throw ConvergenceError("spectral-norm power iteration did not converge", sigma);
}

}  // namespace roast
