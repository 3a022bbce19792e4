#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"

namespace roast {

/// Real symmetric tridiagonal matrix: `diag` has n entries, `off` has n-1.
struct SymmetricTridiagonal {
  RVec diag;
  RVec off;

  long size() const noexcept { return static_cast<long>(diag.size()); }

  /// One-norm (equal to the infinity norm by symmetry).
  double norm() const {
    const long n = size();
    double best = 0.0;
    for (long i = 0; i < n; ++i) {
      double row = std::abs(diag(i));
      if (i > 0) row += std::abs(off(i - 1));
      if (i + 1 < n) row += std::abs(off(i));
      best = std::max(best, row);
    }
    return best;
  }

  RVec apply(const RVec& x) const {
    const long n = size();
    RVec y = diag.cwiseProduct(x);
    for (long i = 0; i + 1 < n; ++i) {
      y(i) += off(i) * x(i + 1);
      y(i + 1) += off(i) * x(i);
    }
    return y;
  }
};

/// Eigenpairs of a symmetric tridiagonal matrix, largest eigenvalues first.
struct TridiagonalEigenpairs {
  RVec values;
  RMat vectors;  // n x k, unit columns
};

namespace detail {

inline double sturm_pivmin(const SymmetricTridiagonal& t) {
  double emax = 1.0;
  for (Index i = 0; i < t.off.size(); ++i) emax = std::max(emax, t.off(i) * t.off(i));
  return std::numeric_limits<double>::min() * emax;
}

// Number of eigenvalues strictly below x (Sturm sequence via the LDL^T pivots).
inline long sturm_count_below(const SymmetricTridiagonal& t, double x, double pivmin) {
  const long n = t.size();
  long count = 0;
  double q = t.diag(0) - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0) ++count;
  for (long i = 1; i < n; ++i) {
    q = t.diag(i) - x - t.off(i - 1) * t.off(i - 1) / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

// LU factorization with partial pivoting of (T - shift I), as in LAPACK's
// gttrf, reused for several inverse-iteration solves.
class ShiftedTridiagonalLu {
 public:
  ShiftedTridiagonalLu(const SymmetricTridiagonal& t, double shift, double tiny_pivot)
      : n_(t.size()), d_(t.diag.array() - shift), dl_(t.off), du_(t.off),
        du2_(RVec::Zero(std::max<long>(n_ - 2, 0))), swapped_(static_cast<std::size_t>(n_), false) {
    for (long i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_(i)) >= std::abs(dl_(i))) {
        const double fact = d_(i) != 0.0 ? dl_(i) / d_(i) : 0.0;
        dl_(i) = fact;
        d_(i + 1) -= fact * du_(i);
      } else {
        const double fact = d_(i) / dl_(i);
        d_(i) = dl_(i);
        dl_(i) = fact;
        const double tmp = du_(i);
        du_(i) = d_(i + 1);
        d_(i + 1) = tmp - fact * d_(i + 1);
        if (i + 2 < n_) {
          du2_(i) = du_(i + 1);
          du_(i + 1) = -fact * du_(i + 1);
        }
        swapped_[static_cast<std::size_t>(i)] = true;
      }
    }
    for (long i = 0; i < n_; ++i) {
      if (std::abs(d_(i)) < tiny_pivot) d_(i) = d_(i) < 0 ? -tiny_pivot : tiny_pivot;
    }
  }

  void solve_in_place(RVec& x) const {
    for (long i = 0; i + 1 < n_; ++i) {
      if (swapped_[static_cast<std::size_t>(i)]) std::swap(x(i), x(i + 1));
      x(i + 1) -= dl_(i) * x(i);
    }
    x(n_ - 1) /= d_(n_ - 1);
    if (n_ >= 2) x(n_ - 2) = (x(n_ - 2) - du_(n_ - 2) * x(n_ - 1)) / d_(n_ - 2);
    for (long i = n_ - 3; i >= 0; --i) {
      x(i) = (x(i) - du_(i) * x(i + 1) - du2_(i) * x(i + 2)) / d_(i);
    }
  }

 private:
  long n_;
  RVec d_, dl_, du_, du2_;
  std::vector<bool> swapped_;
};

}  // namespace detail

/// The k largest eigenvalues, in descending order, by Sturm-sequence bisection.
inline RVec largest_eigenvalues(const SymmetricTridiagonal& t, long k) {
  const long n = t.size();
  detail::require(n >= 1 && t.off.size() == n - 1, "malformed tridiagonal matrix");
  detail::require(k >= 1 && k <= n, "eigenvalue count out of range");
  const double pivmin = detail::sturm_pivmin(t);
  const double bound = t.norm();
  const double eps = std::numeric_limits<double>::epsilon();

  RVec values(k);
  double upper = bound * (1.0 + 4.0 * eps) + pivmin;
  for (long j = 0; j < k; ++j) {
    const long ascending = n - 1 - j;  // index of the target in ascending order
    double lo = -bound * (1.0 + 4.0 * eps) - pivmin;
    double hi = upper;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + pivmin) break;
      if (detail::sturm_count_below(t, mid, pivmin) <= ascending) lo = mid;
      else hi = mid;
    }
    values(j) = 0.5 * (lo + hi);
    upper = hi;
  }
  return values;
}

/// Eigenvectors for the given eigenvalues (sorted descending) by inverse
/// iteration. Vectors of eigenvalues closer than 1e-6 ||T|| are
/// re-orthogonalized against each other; a wider gap already keeps the
/// loss of orthogonality near eps/1e-6. Throws ConvergenceError when a
/// vector's residual ||T v - theta v|| stays above tolerance.
inline RMat eigenvectors_by_inverse_iteration(const SymmetricTridiagonal& t, const RVec& values) {
  const long n = t.size();
  const long k = values.size();
  const double tnorm = std::max(t.norm(), std::numeric_limits<double>::min());
  const double eps = std::numeric_limits<double>::epsilon();
  const double cluster_gap = 1e-6 * tnorm;
  const double residual_tol = 1e-10 * tnorm;

  RMat vectors(n, k);
  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  long cluster_start = 0;

  for (long j = 0; j < k; ++j) {
    if (j > 0 && values(j - 1) - values(j) >= cluster_gap) cluster_start = j;
    const detail::ShiftedTridiagonalLu lu(t, values(j), eps * tnorm);

    RVec v(n);
    for (long i = 0; i < n; ++i) v(i) = uniform(rng);
    v.normalize();
    for (int it = 0; it < 4; ++it) {
      lu.solve_in_place(v);
      for (long c = cluster_start; c < j; ++c) v -= vectors.col(c).dot(v) * vectors.col(c);
      const double nv = v.norm();
      if (!(nv > 0.0) || !std::isfinite(nv)) {
        throw ConvergenceError("inverse iteration broke down at eigenvalue " + std::to_string(j), nv);
      }
      v /= nv;
    }
    const double residual = (t.apply(v) - values(j) * v).norm();
    if (!(residual <= residual_tol)) {
      throw ConvergenceError("inverse iteration did not converge at eigenvalue " + std::to_string(j),
                             residual);
    }
    vectors.col(j) = v;
  }
  return vectors;
}

inline TridiagonalEigenpairs largest_eigenpairs(const SymmetricTridiagonal& t, long k) {
  TridiagonalEigenpairs out;
  out.values = largest_eigenvalues(t, k);
  out.vectors = eigenvectors_by_inverse_iteration(t, out.values);
  return out;
}

}  // namespace roast
