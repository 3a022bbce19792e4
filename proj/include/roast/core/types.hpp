#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include <Eigen/Dense>

namespace roast {

using Complex = std::complex<double>;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline constexpr double kPi = std::numbers::pi;

namespace detail {

// Integer parts of products like N*W, tolerant of decimal inputs that are
// not exactly representable (0.29 * 100 == 28.999999999999996).
inline constexpr double kIntegerSnap = 1e-9;

inline long floor_snap(double x) { return static_cast<long>(std::floor(x + kIntegerSnap)); }
inline long ceil_snap(double x) { return static_cast<long>(std::ceil(x - kIntegerSnap)); }

inline std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace detail

/// Signed digital frequency of DFT bin k: k/N for k <= N/2, (k-N)/N otherwise.
inline long signed_bin(long k, long n) { return k <= n / 2 ? k : k - n; }

}  // namespace roast
