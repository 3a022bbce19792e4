#pragma once

#include <algorithm>
#include <string>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"
#include "roast/metrics/linalg.hpp"
#include "roast/transform/basis.hpp"

namespace roast {

struct AngleReport {
  RVec principal_cosines;  // descending
  double largest_angle_cos = 1.0;
};

namespace detail {

inline void require_orthonormal(const CMat& a, const char* what) {
  require(gram_defect(a) <= 1e-8, std::string(what) + " is not orthonormal");
}

}  // namespace detail

/// Principal cosines: singular values of A* B, min(p, q) of them. The
/// smallest is the cosine of the largest principal angle.
inline AngleReport subspace_angle(const CMat& a, const CMat& b) {
  detail::require(a.rows() == b.rows(), "subspace angle: ambient dimensions differ");
  detail::require(a.cols() >= 1 && b.cols() >= 1, "subspace angle: empty basis");
  detail::require_orthonormal(a, "first basis");
  detail::require_orthonormal(b, "second basis");
  AngleReport r;
  r.principal_cosines = singular_values(CMat(a.adjoint() * b));
  r.largest_angle_cos = r.principal_cosines(r.principal_cosines.size() - 1);
  return r;
}

/// Infimum over unit vectors x in the narrower subspace of ||P_wide x||,
/// evaluated as the smallest singular value of P_wide X_narrow.
inline double subspace_angle_cos_infimum(const CMat& a, const CMat& b) {
  detail::require(a.rows() == b.rows(), "subspace angle: ambient dimensions differ");
  detail::require_orthonormal(a, "first basis");
  detail::require_orthonormal(b, "second basis");
  const CMat& wide = b.cols() >= a.cols() ? b : a;
  const CMat& narrow = b.cols() >= a.cols() ? a : b;
  const CMat projected = wide * (wide.adjoint() * narrow);
  const RVec s = singular_values(projected);
  return s(s.size() - 1);
}

template <OrthonormalBasis A, OrthonormalBasis B>
AngleReport subspace_angle(const A& a, const B& b) {
  return subspace_angle(materialize(a), materialize(b));
}

}  // namespace roast
