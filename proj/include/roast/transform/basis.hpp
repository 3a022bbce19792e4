#pragma once

#include <cmath>
#include <concepts>
#include <vector>

#include "roast/core/band_split.hpp"
#include "roast/core/error.hpp"
#include "roast/core/fft.hpp"
#include "roast/core/types.hpp"

namespace roast {

/// An N x D matrix with orthonormal columns, available through its analysis
/// (Q* x) and synthesis (Q c) actions.
template <class B>
concept OrthonormalBasis = requires(const B& b, const CVec& v) {
  { b.n() } -> std::convertible_to<long>;
  { b.dimension() } -> std::convertible_to<long>;
  { b.analysis(v) } -> std::convertible_to<CVec>;
  { b.synthesis(v) } -> std::convertible_to<CVec>;
};

/// Q Q* x for any orthonormal basis.
template <OrthonormalBasis B>
CVec project(const B& basis, const CVec& x) {
  return basis.synthesis(basis.analysis(x));
}

/// The explicit N x D matrix, one synthesis per column.
template <OrthonormalBasis B>
CMat materialize(const B& basis) {
  const long d = basis.dimension();
  CMat q(basis.n(), d);
  CVec e = CVec::Zero(d);
  for (long j = 0; j < d; ++j) {
    e(j) = 1.0;
    q.col(j) = basis.synthesis(e);
    e(j) = 0.0;
  }
  return q;
}

/// Basis held as an explicit matrix. Orthonormality is the caller's claim;
/// `gram_defect` lets metrics check it.
class DenseBasis {
 public:
  DenseBasis() = default;
  explicit DenseBasis(CMat q) : q_(std::move(q)) {}
  explicit DenseBasis(const RMat& q) : q_(q.cast<Complex>()) {}

  long n() const noexcept { return static_cast<long>(q_.rows()); }
  long dimension() const noexcept { return static_cast<long>(q_.cols()); }
  const CMat& matrix() const noexcept { return q_; }

  CVec analysis(const CVec& x) const {
    detail::require(x.size() == q_.rows(), "analysis: length mismatch");
    return q_.adjoint() * x;
  }
  CVec synthesis(const CVec& c) const {
    detail::require(c.size() == q_.cols(), "synthesis: coefficient length mismatch");
    return q_ * c;
  }

 private:
  CMat q_;
};

/// Max-abs entry of Q*Q - I.
inline double gram_defect(const CMat& q) {
  CMat g = q.adjoint() * q;
  g -= CMat::Identity(q.cols(), q.cols());
  return q.cols() == 0 ? 0.0 : g.cwiseAbs().maxCoeff();
}

/// Columns of the unitary DFT, (1/sqrt(N)) exp(j 2 pi k m / N), at a list of
/// bins. Analysis is a forward FFT followed by a gather.
class DftColumnsBasis {
 public:
  DftColumnsBasis() = default;
  DftColumnsBasis(long n, std::vector<long> bins) : n_(n), bins_(std::move(bins)), plan_(static_cast<std::size_t>(n)) {
    detail::require(n >= 1, "DFT basis needs n >= 1");
    for (long b : bins_) detail::require(b >= 0 && b < n, "DFT bin out of range");
  }

  long n() const noexcept { return n_; }
  long dimension() const noexcept { return static_cast<long>(bins_.size()); }
  const std::vector<long>& bins() const noexcept { return bins_; }

  CVec analysis(const CVec& x) const {
    detail::require(x.size() == n_, "analysis: length mismatch");
    return DftBandSplit::gather(plan_.forward(x), bins_) / std::sqrt(static_cast<double>(n_));
  }
  CVec synthesis(const CVec& c) const {
    detail::require(c.size() == dimension(), "synthesis: coefficient length mismatch");
    CVec spectrum = CVec::Zero(n_);
    DftBandSplit::scatter(c, bins_, spectrum);
    return plan_.backward(spectrum) / std::sqrt(static_cast<double>(n_));
  }

 private:
  long n_ = 0;
  std::vector<long> bins_;
  FftPlan plan_;
};

}  // namespace roast
