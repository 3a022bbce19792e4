#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "roast/core/band_split.hpp"
#include "roast/core/error.hpp"
#include "roast/core/fft.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/types.hpp"

namespace roast {

enum class RoastMethod { svd_fb, svd_fbf, randomized };

inline std::string to_string(RoastMethod m) {
  switch (m) {
    case RoastMethod::svd_fb: return "svd_fb";
    case RoastMethod::svd_fbf: return "svd_fbf";
    case RoastMethod::randomized: return "randomized";
  }
  return "unknown";
}

inline RoastMethod parse_roast_method(const std::string& s) {
  if (s == "svd_fb") return RoastMethod::svd_fb;
  if (s == "svd_fbf") return RoastMethod::svd_fbf;
  if (s == "randomized") return RoastMethod::randomized;
  throw InvalidArgument("unknown method '" + s + "'");
}

/// Q = [F_low, F_high V]: the low DFT band plus R orthonormal combinations of
/// the high band. Analysis and synthesis cost one FFT plus an (N-2L-1) x R
/// product.
class RoastBasis {
 public:
  RoastBasis() = default;

  /// Wraps an externally supplied V (e.g. a deserialized one). V must have
  /// split.high_size() rows; orthonormality is not re-checked here.
  RoastBasis(DftBandSplit split, CMat v, RoastMethod method, std::optional<long> sketch_width = std::nullopt,
             std::optional<std::uint64_t> seed = std::nullopt)
      : split_(std::move(split)), v_(std::move(v)), method_(method), sketch_width_(sketch_width), seed_(seed),
        plan_(static_cast<std::size_t>(split_.n)) {
    detail::require(v_.rows() == split_.high_size(), "V row count must equal the high-band size");
  }

  long n() const noexcept { return split_.n; }
  double w() const noexcept { return split_.w; }
  long r() const noexcept { return static_cast<long>(v_.cols()); }
  long dimension() const noexcept { return split_.low_size() + r(); }
  const DftBandSplit& split() const noexcept { return split_; }
  const CMat& v() const noexcept { return v_; }
  RoastMethod method() const noexcept { return method_; }
  std::optional<long> sketch_width() const noexcept { return sketch_width_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  CVec analysis(const CVec& x) const {
    detail::require(x.size() == n(), "analysis: length mismatch");
    const CVec a = plan_.forward(x) / std::sqrt(static_cast<double>(n()));
    CVec out(dimension());
    const long low = split_.low_size();
    for (long i = 0; i < low; ++i) out(i) = a(split_.low_indices[static_cast<std::size_t>(i)]);
    if (r() > 0) out.tail(r()).noalias() = v_.adjoint() * DftBandSplit::gather(a, split_.high_indices);
    return out;
  }

  CVec synthesis(const CVec& c) const {
    detail::require(c.size() == dimension(), "synthesis: coefficient length mismatch");
    CVec spectrum = CVec::Zero(n());
    const long low = split_.low_size();
    for (long i = 0; i < low; ++i) spectrum(split_.low_indices[static_cast<std::size_t>(i)]) = c(i);
    if (r() > 0) DftBandSplit::scatter(CVec(v_ * c.tail(r())), split_.high_indices, spectrum);
    return plan_.backward(spectrum) / std::sqrt(static_cast<double>(n()));
  }

  CVec project(const CVec& x) const { return synthesis(analysis(x)); }

 private:
  DftBandSplit split_;
  CMat v_;
  RoastMethod method_ = RoastMethod::svd_fb;
  std::optional<long> sketch_width_;
  std::optional<std::uint64_t> seed_;
  FftPlan plan_;
};

inline constexpr long kDenseBuildLimit = 8192;

/// F_high* y for a real or complex length-N vector y: unitary FFT then gather.
inline CVec high_band_coefficients(const FftPlan& plan, const DftBandSplit& split, const CVec& y) {
  return DftBandSplit::gather(plan.forward(y), split.high_indices) / std::sqrt(static_cast<double>(split.n));
}

/// The (N-2L-1) x N matrix F_high* B, one column per prolate column.
inline CMat fbar_b_matrix(const ProlateOperator& op, const DftBandSplit& split) {
  detail::require(op.n() == split.n, "operator and band split disagree on n");
  detail::require(op.n() <= kDenseBuildLimit, "dense F_high* B is limited to n <= 8192");
  const FftPlan plan(static_cast<std::size_t>(op.n()));
  CMat a(split.high_size(), op.n());
  for (long j = 0; j < op.n(); ++j) a.col(j) = high_band_coefficients(plan, split, op.column(j).cast<Complex>());
  return a;
}

/// F_high* B F_high, Hermitian-symmetrized. Row i of (F_high* B) times F_high
/// is an inverse FFT of that row.
inline CMat fbar_b_fbar_matrix(const CMat& fbar_b, const DftBandSplit& split) {
  const long n = split.n;
  const FftPlan plan(static_cast<std::size_t>(n));
  const long m = split.high_size();
  CMat g(m, m);
  CVec row(n);
  for (long i = 0; i < m; ++i) {
    row = fbar_b.row(i).transpose();
    const CVec t = plan.backward(row) / std::sqrt(static_cast<double>(n));
    for (long c = 0; c < m; ++c) g(i, c) = t(split.high_indices[static_cast<std::size_t>(c)]);
  }
  return 0.5 * (g + g.adjoint());
}

inline RoastBasis build_roast(const ProlateOperator& op, long r, RoastMethod method) {
  detail::require(method != RoastMethod::randomized, "use build_roast_randomized for the randomized method");
  DftBandSplit split = build_band_split(op.n(), op.w());
  detail::require(r >= 0 && r <= split.high_size(), "r exceeds the high-band width n - 2*floor(n*w) - 1");
  if (r == 0) {
    CMat empty(split.high_size(), 0);
    return RoastBasis(std::move(split), std::move(empty), method);
  }

  const CMat a = fbar_b_matrix(op, split);
  CMat v;
  if (method == RoastMethod::svd_fb) {
    Eigen::BDCSVD<CMat> svd(a, Eigen::ComputeThinU);
    v = svd.matrixU().leftCols(r);
  } else {
    Eigen::SelfAdjointEigenSolver<CMat> es(fbar_b_fbar_matrix(a, split));
    if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed on F_high* B F_high", 0.0);
    const long m = split.high_size();
    v.resize(m, r);
    for (long j = 0; j < r; ++j) v.col(j) = es.eigenvectors().col(m - 1 - j);
  }
  return RoastBasis(std::move(split), std::move(v), method);
}

inline RoastBasis build_roast(long n, double w, long r, RoastMethod method) {
  return build_roast(ProlateOperator(n, w), r, method);
}

/// N x P real standard Gaussian sketch, filled column by column from one
/// mt19937_64 stream.
inline RMat gaussian_sketch(long n, long p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RMat omega(n, p);
  for (long j = 0; j < p; ++j)
    for (long i = 0; i < n; ++i) omega(i, j) = normal(rng);
  return omega;
}

inline constexpr double kSketchRankThreshold = 1e-12;

/// Range finder on F_high* B: Y = F_high* (B Omega) through the fast matvec,
/// then a column-pivoted QR. Columns whose R-diagonal falls below 1e-12 of
/// the leading one are dropped and r() reports the retained rank.
inline RoastBasis build_roast_randomized(const ProlateOperator& op, long p, std::uint64_t seed) {
  DftBandSplit split = build_band_split(op.n(), op.w());
  detail::require(p >= 1 && p <= split.high_size(), "sketch width p must satisfy 1 <= p <= n - 2*floor(n*w) - 1");
  const FftPlan plan(static_cast<std::size_t>(op.n()));
  const RMat omega = gaussian_sketch(op.n(), p, seed);
  CMat y(split.high_size(), p);
  for (long j = 0; j < p; ++j) y.col(j) = high_band_coefficients(plan, split, op.apply(RVec(omega.col(j))).cast<Complex>());

  Eigen::ColPivHouseholderQR<CMat> qr(y);
  const auto& rf = qr.matrixR();
  const double lead = std::abs(rf(0, 0));
  long rank = 0;
  while (rank < p && std::abs(rf(rank, rank)) > kSketchRankThreshold * lead) ++rank;
  CMat v = qr.householderQ() * CMat::Identity(split.high_size(), rank);
  return RoastBasis(std::move(split), std::move(v), RoastMethod::randomized, p, seed);
}

inline RoastBasis build_roast_randomized(long n, double w, long p, std::uint64_t seed) {
  return build_roast_randomized(ProlateOperator(n, w), p, seed);
}

}  // namespace roast
