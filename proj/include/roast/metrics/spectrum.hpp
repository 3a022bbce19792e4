#pragma once

#include <cmath>
#include <vector>

#include "roast/core/band_split.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/types.hpp"
#include "roast/metrics/ledger.hpp"
#include "roast/metrics/linalg.hpp"
#include "roast/transform/rank_rules.hpp"
#include "roast/transform/roast_basis.hpp"

namespace roast {

struct SpectrumReport {
  RVec singular_values;  // descending
  double c_n = 0.0;
  RVec bound_curve;      // 15 exp(-l / C_N)
  std::vector<long> violations;
};

/// Compares a descending spectrum against 15 exp(-l/C_N).
inline SpectrumReport spectrum_report(const RVec& values, long n) {
  SpectrumReport r;
  r.singular_values = values;
  r.c_n = c_n(n);
  r.bound_curve.resize(values.size());
  for (Index l = 0; l < values.size(); ++l) {
    r.bound_curve(l) = 15.0 * std::exp(-static_cast<double>(l) / r.c_n);
    if (values(l) > r.bound_curve(l)) r.violations.push_back(static_cast<long>(l));
  }
  return r;
}

/// Full singular spectrum of F_high* B with the decay bound.
inline SpectrumReport singular_decay_report(const ProlateOperator& op) {
  const DftBandSplit split = build_band_split(op.n(), op.w());
  return spectrum_report(singular_values(fbar_b_matrix(op, split)), op.n());
}

inline SpectrumReport singular_decay_report(long n, double w) { return singular_decay_report(ProlateOperator(n, w)); }

/// Singular values pi_l of (I - V V*) F_high* B.
inline RVec deflated_singular_values(const CMat& fbar_b, const CMat& v) {
  CMat d = fbar_b;
  if (v.cols() > 0) d -= v * (v.adjoint() * fbar_b);
  return singular_values(d);
}

/// sum_{l >= R} sigma_l <= 15 exp(-(R-1)/C_N) C_N.
inline BoundEntry singular_tail_check(const RVec& sigma, long n, long r) {
  double tail = 0.0;
  for (Index l = sigma.size() - 1; l >= r; --l) tail += sigma(l);
  const double c = c_n(n);
  return upper_bound_entry("singular_tail_sum", tail, 15.0 * std::exp(-static_cast<double>(r - 1) / c) * c,
                           {{"n", n}, {"r", r}});
}

}  // namespace roast
