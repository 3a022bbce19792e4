#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "roast/core/band_split.hpp"
#include "roast/core/error.hpp"
#include "roast/core/fft.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/types.hpp"
#include "roast/transform/basis.hpp"

namespace roast {

/// DFT columns at the 2L+1+R lowest |frequency| bins: the low band plus
/// ceil(R/2) bins above +L and floor(R/2) below -L, spilling to the other
/// side once one side runs out. Coefficients are ordered by signed frequency.
class SubDftBasis : public DftColumnsBasis {
 public:
  SubDftBasis(long n, double w, long r) : DftColumnsBasis(n, select_bins(n, w, r)), w_(w), r_(r) {}

  double w() const noexcept { return w_; }
  long r() const noexcept { return r_; }

  static std::vector<long> select_bins(long n, double w, long r) {
    const DftBandSplit split = build_band_split(n, w);
    detail::require(r >= 0 && split.low_size() + r <= n, "sub-DFT band overflow: 2*floor(n*w)+1+r exceeds n");
    const long half = split.half_band;
    const long pos_avail = n / 2 - half;
    const long neg_avail = split.high_size() - pos_avail;
    long pos = std::min((r + 1) / 2, pos_avail);
    long neg = r - pos;
    if (neg > neg_avail) {
      neg = neg_avail;
      pos = r - neg;
    }
    std::vector<long> bins = split.low_indices;
    for (long i = 1; i <= pos; ++i) bins.push_back(half + i);
    for (long i = 1; i <= neg; ++i) bins.push_back(n - half - i);
    std::sort(bins.begin(), bins.end(), [n](long a, long b) { return signed_bin(a, n) < signed_bin(b, n); });
    return bins;
  }

 private:
  double w_;
  long r_;
};

inline SubDftBasis build_subdft(long n, double w, long r) { return SubDftBasis(n, w, r); }

/// (F F*)_{mk} for the low band: the real Dirichlet kernel
/// sin(pi (2L+1) d / N) / (N sin(pi d / N)), d = m - k.
inline double low_band_projector_entry(long n, long half, long d) {
  const long dm = ((d % n) + n) % n;
  if (dm == 0) return static_cast<double>(2 * half + 1) / static_cast<double>(n);
  const double x = kPi * static_cast<double>(d) / static_cast<double>(n);
  return std::sin(static_cast<double>(2 * half + 1) * x) / (static_cast<double>(n) * std::sin(x));
}

/// F F* + L_r, where L_r is the best rank-r approximation of the real
/// symmetric matrix B - F F* (spectral truncation by eigenvalue magnitude).
class FstAnalog {
 public:
  FstAnalog(const ProlateOperator& op, long rank_r)
      : split_(build_band_split(op.n(), op.w())), plan_(static_cast<std::size_t>(op.n())) {
    const long n = op.n();
    detail::require(rank_r >= 0 && rank_r <= n, "rank_r must satisfy 0 <= rank_r <= n");
    RMat d(n, n);
    for (long j = 0; j < n; ++j)
      for (long i = 0; i < n; ++i) d(i, j) = op.entry(i, j) - low_band_projector_entry(n, split_.half_band, i - j);

    Eigen::SelfAdjointEigenSolver<RMat> es(d);
    if (es.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed on B - F F*", 0.0);
    std::vector<long> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0L);
    const RVec& mu = es.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](long a, long b) { return std::abs(mu(a)) > std::abs(mu(b)); });

    factor_.resize(n, rank_r);
    weights_.resize(rank_r);
    for (long j = 0; j < rank_r; ++j) {
      factor_.col(j) = es.eigenvectors().col(order[static_cast<std::size_t>(j)]);
      weights_(j) = mu(order[static_cast<std::size_t>(j)]);
    }
    residual_norm_ = rank_r < n ? std::abs(mu(order[static_cast<std::size_t>(rank_r)])) : 0.0;
  }

  long n() const noexcept { return split_.n; }
  long rank() const noexcept { return static_cast<long>(weights_.size()); }
  const DftBandSplit& split() const noexcept { return split_; }
  /// Orthonormal U_r and eigenvalues mu_r with L_r = U_r diag(mu_r) U_r^T.
  const RMat& low_rank_factor() const noexcept { return factor_; }
  const RVec& low_rank_weights() const noexcept { return weights_; }
  /// ||B - (F F* + L_r)||, the largest discarded |eigenvalue|.
  double spectral_distance() const noexcept { return residual_norm_; }

  CVec apply(const CVec& x) const {
    detail::require(x.size() == n(), "FST-analog apply: length mismatch");
    CVec spectrum = plan_.forward(x);
    CVec kept = CVec::Zero(n());
    for (long b : split_.low_indices) kept(b) = spectrum(b);
    CVec y = plan_.backward(kept) / static_cast<double>(n());
    if (rank() > 0) {
      const CVec c = factor_.transpose().cast<Complex>() * x;
      y.noalias() += factor_.cast<Complex>() * CVec(weights_.cast<Complex>().cwiseProduct(c));
    }
    return y;
  }

  /// Explicit unitary low-band columns F, N x (2L+1), in low_indices order.
  CMat low_band_columns() const {
    CMat f(n(), split_.low_size());
    const double s = 1.0 / std::sqrt(static_cast<double>(n()));
    for (long c = 0; c < split_.low_size(); ++c) {
      const long k = split_.low_indices[static_cast<std::size_t>(c)];
      for (long m = 0; m < n(); ++m) f(m, c) = std::polar(s, 2.0 * kPi * static_cast<double>(k * m % n()) / n());
    }
    return f;
  }

  /// The non-orthogonal pair T1 = [F, U_r diag(mu_r)], T2 = [F, U_r] with
  /// T1 T2* = F F* + L_r.
  CMat left_factor() const {
    CMat t(n(), split_.low_size() + rank());
    t.leftCols(split_.low_size()) = low_band_columns();
    t.rightCols(rank()) = (factor_ * weights_.asDiagonal()).cast<Complex>();
    return t;
  }
  CMat right_factor() const {
    CMat t(n(), split_.low_size() + rank());
    t.leftCols(split_.low_size()) = low_band_columns();
    t.rightCols(rank()) = factor_.cast<Complex>();
    return t;
  }

  CMat dense() const { return left_factor() * right_factor().adjoint(); }

 private:
  DftBandSplit split_;
  FftPlan plan_;
  RMat factor_;
  RVec weights_;
  double residual_norm_ = 0.0;
};

inline FstAnalog build_fst_analog(long n, double w, long rank_r) { return FstAnalog(ProlateOperator(n, w), rank_r); }

}  // namespace roast
