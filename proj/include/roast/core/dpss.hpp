#pragma once

#include <cmath>

#include "roast/core/error.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/tridiagonal.hpp"
#include "roast/core/types.hpp"

namespace roast {

/// Leading K discrete prolate spheroidal sequences for (N, W), as unit-norm
/// columns, with their prolate-matrix eigenvalues in descending order.
struct DpssBasis {
  long n = 0;
  double w = 0.0;
  long k = 0;
  RMat vectors;      // n x k
  RVec eigenvalues;  // length k
};

/// Entries of the tridiagonal matrix that commutes with the prolate matrix and
/// shares its eigenvectors, in the same order.
inline SymmetricTridiagonal dpss_commuting_matrix(long n, double w) {
  SymmetricTridiagonal t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  const double c = std::cos(2.0 * kPi * w);
  for (long m = 0; m < n; ++m) {
    const double h = 0.5 * static_cast<double>(n - 1 - 2 * m);
    t.diag(m) = h * h * c;
  }
  for (long m = 1; m < n; ++m) t.off(m - 1) = 0.5 * static_cast<double>(m) * static_cast<double>(n - m);
  return t;
}

namespace detail {

inline constexpr double kSignThreshold = 1e-12;

template <class Col>
void apply_sign_convention(Col&& col) {
  for (Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) > kSignThreshold) {
      if (col(i) < 0) col = -col;
      return;
    }
  }
}

}  // namespace detail

/// Eigenvalues are Rayleigh quotients s^T B s through the fast matvec; the
/// ordering comes from the commuting matrix, whose eigenvalue order matches
/// the prolate order exactly while staying well separated.
inline DpssBasis build_dpss(const ProlateOperator& op, long k) {
  const long n = op.n();
  detail::require(k >= 1 && k <= n, "dpss count k must satisfy 1 <= k <= n");
  const auto pairs = largest_eigenpairs(dpss_commuting_matrix(n, op.w()), k);

  DpssBasis out;
  out.n = n;
  out.w = op.w();
  out.k = k;
  out.vectors = pairs.vectors;
  out.eigenvalues.resize(k);
  for (long l = 0; l < k; ++l) {
    auto col = out.vectors.col(l);
    detail::apply_sign_convention(col);
    out.eigenvalues(l) = col.dot(op.apply(RVec(col)));
  }
  return out;
}

inline DpssBasis build_dpss(long n, double w, long k) { return build_dpss(ProlateOperator(n, w), k); }

}  // namespace roast
