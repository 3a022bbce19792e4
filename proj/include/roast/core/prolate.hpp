#pragma once

#include <cmath>

#include "roast/core/error.hpp"
#include "roast/core/fft.hpp"
#include "roast/core/types.hpp"

namespace roast {

/// The N x N prolate matrix with entries sin(2 pi W (m-n)) / (pi (m-n)) and
/// diagonal 2W, held implicitly as its Toeplitz generator. Products are
/// computed by embedding the matrix in a circulant of power-of-two length
/// at least 2N-1.
class ProlateOperator {
 public:
  ProlateOperator(long n, double w) : n_(n), w_(w) {
    detail::require(n >= 2, "prolate operator needs n >= 2");
    detail::require(w > 0.0 && w < 0.5, "half-bandwidth w must lie in (0, 1/2)");
    first_row_.resize(n);
    first_row_(0) = 2.0 * w;
    for (long d = 1; d < n; ++d) first_row_(d) = std::sin(2.0 * kPi * w * d) / (kPi * d);

    const auto len = detail::next_power_of_two(static_cast<std::size_t>(2 * n - 1));
    plan_ = FftPlan(len);
    CVec generator = CVec::Zero(static_cast<Index>(len));
    for (long d = 0; d < n; ++d) generator(d) = first_row_(d);
    for (long d = 1; d < n; ++d) generator(static_cast<Index>(len) - d) = first_row_(d);
    symbol_ = plan_.forward(generator) / static_cast<double>(len);
  }

  long n() const noexcept { return n_; }
  double w() const noexcept { return w_; }
  const RVec& first_row() const noexcept { return first_row_; }
  std::size_t embedding_size() const noexcept { return plan_.size(); }

  double entry(long m, long k) const { return first_row_(std::abs(m - k)); }
  double trace() const noexcept { return 2.0 * w_ * static_cast<double>(n_); }

  /// Column j of the matrix (equal to row j by symmetry).
  RVec column(long j) const {
    RVec c(n_);
    for (long m = 0; m < n_; ++m) c(m) = entry(m, j);
    return c;
  }

  RMat dense() const {
    RMat b(n_, n_);
    for (long j = 0; j < n_; ++j) b.col(j) = column(j);
    return b;
  }

  CVec apply(const CVec& x) const {
    detail::require(x.size() == n_, "prolate apply: length mismatch");
    const auto len = static_cast<Index>(plan_.size());
    CVec padded = CVec::Zero(len);
    padded.head(n_) = x;
    CVec spectrum = plan_.forward(padded);
    spectrum.array() *= symbol_.array();
    return plan_.backward(spectrum).head(n_);
  }

  RVec apply(const RVec& x) const { return apply(CVec(x.cast<Complex>())).real(); }

 private:
  long n_;
  double w_;
  RVec first_row_;
  FftPlan plan_;
  CVec symbol_;  // circulant eigenvalues, pre-divided by the embedding length
};

inline ProlateOperator build_prolate(long n, double w) { return ProlateOperator(n, w); }

}  // namespace roast
