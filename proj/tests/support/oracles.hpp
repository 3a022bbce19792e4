#pragma once

// Dense, formula-level reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using CM = Eigen::MatrixXcd;
using RM = Eigen::MatrixXd;
using CV = Eigen::VectorXcd;
using RV = Eigen::VectorXd;
inline constexpr double pi = std::numbers::pi;

inline RM prolate(long n, double w) {
  RM b(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const long d = i - j;
      b(i, j) = d == 0 ? 2.0 * w : std::sin(2.0 * pi * w * d) / (pi * d);
    }
  return b;
}

/// Unitary DFT column for bin k: exp(j 2 pi k m / N) / sqrt(N).
inline CV dft_column(long n, long k) {
  CV c(n);
  for (long m = 0; m < n; ++m) c(m) = std::polar(1.0 / std::sqrt(double(n)), 2.0 * pi * double((k * m) % n) / double(n));
  return c;
}

inline CM dft_columns(long n, const std::vector<long>& bins) {
  CM f(n, long(bins.size()));
  for (std::size_t i = 0; i < bins.size(); ++i) f.col(long(i)) = dft_column(n, bins[i]);
  return f;
}

inline long signed_freq(long k, long n) { return k <= n / 2 ? k : k - n; }

/// Bins with |signed frequency| <= L, ascending in signed frequency.
inline std::vector<long> low_bins(long n, long half) {
  std::vector<long> b;
  for (long k = -half; k <= half; ++k) b.push_back(((k % n) + n) % n);
  return b;
}

inline std::vector<long> high_bins(long n, long half) {
  std::vector<long> b;
  for (long s = -((n - 1) / 2); s <= n / 2; ++s)
    if (std::abs(s) > half) b.push_back(((s % n) + n) % n);
  return b;
}

inline CM projector(const CM& q) { return q * q.adjoint(); }

inline CV sinusoid(long n, double f) {
  CV e(n);
  for (long m = 0; m < n; ++m) e(m) = std::polar(1.0, 2.0 * pi * f * m);
  return e;
}

/// All eigenpairs of the commuting tridiagonal matrix through Eigen's
/// tridiagonal QR, descending.
inline std::pair<RV, RM> dpss_reference(long n, double w) {
  RV d(n), e(n - 1);
  for (long m = 0; m < n; ++m) d(m) = std::pow(0.5 * (n - 1 - 2 * m), 2) * std::cos(2.0 * pi * w);
  for (long m = 1; m < n; ++m) e(m - 1) = 0.5 * m * (n - m);
  Eigen::SelfAdjointEigenSolver<RM> es;
  es.computeFromTridiagonal(d, e);
  RM v = es.eigenvectors().rowwise().reverse();
  const RM b = prolate(n, w);
  RV lam(n);
  for (long l = 0; l < n; ++l) {
    for (long i = 0; i < n; ++i)
      if (std::abs(v(i, l)) > 1e-12) {
        if (v(i, l) < 0) v.col(l) *= -1.0;
        break;
      }
    lam(l) = v.col(l).dot(b * v.col(l));
  }
  return {lam, v};
}

inline CV random_cvec(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CV x(n);
  for (long i = 0; i < n; ++i) x(i) = C(g(rng), g(rng));
  return x;
}

inline double max_abs(const CM& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle
