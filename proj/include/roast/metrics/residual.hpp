#pragma once

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "roast/core/error.hpp"
#include "roast/core/parallel.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/signals.hpp"
#include "roast/core/types.hpp"
#include "roast/transform/basis.hpp"

namespace roast {

inline constexpr double kGramTolerance = 1e-8;

/// ||e_f - Q Q* e_f||^2.
template <OrthonormalBasis B>
double sinusoid_residual(const B& basis, double f) {
  const CVec e = sinusoid_samples(basis.n(), f);
  return (e - project(basis, e)).squaredNorm();
}

/// trace(B - Q Q* B) = trace(B) - sum_i q_i* B q_i, through the fast matvec.
/// Throws InvalidArgument if Q*Q deviates from I by more than 1e-8.
inline double integrated_residual(const ProlateOperator& op, const CMat& q) {
  detail::require(q.rows() == op.n(), "integrated residual: basis length mismatch");
  detail::require(gram_defect(q) <= kGramTolerance, "integrated residual: basis is not orthonormal");
  long double captured = 0.0L;
  for (Index i = 0; i < q.cols(); ++i) {
    const CVec col = q.col(i);
    captured += static_cast<long double>(col.dot(op.apply(col)).real());
  }
  return static_cast<double>(static_cast<long double>(op.trace()) - captured);
}

template <OrthonormalBasis B>
double integrated_residual(const ProlateOperator& op, const B& basis) {
  return integrated_residual(op, materialize(basis));
}

enum class QuadratureRule { gauss_legendre, trapezoid };

inline constexpr long kQuadratureNodes = 4096;
inline constexpr int kGaussPanelOrder = 16;

/// Integral of ||e_f - Q Q* e_f||^2 over f in [-w, w]. The Gauss-Legendre
/// rule uses nodes/16 panels of 16 points (nodes must be a multiple of 16);
/// the trapezoid rule uses `nodes` equispaced points including both ends.
template <OrthonormalBasis B>
double integrated_residual_quadrature(const B& basis, double w, long nodes = kQuadratureNodes,
                                      QuadratureRule rule = QuadratureRule::gauss_legendre) {
  detail::require(w > 0.0 && w < 0.5, "half-bandwidth w must lie in (0, 1/2)");
  std::vector<double> f, weight;
  if (rule == QuadratureRule::gauss_legendre) {
    detail::require(nodes >= kGaussPanelOrder && nodes % kGaussPanelOrder == 0,
                    "Gauss-Legendre node count must be a positive multiple of 16");
    using Gauss = boost::math::quadrature::gauss<double, kGaussPanelOrder>;
    const auto& abscissa = Gauss::abscissa();
    const auto& weights = Gauss::weights();
    const long panels = nodes / kGaussPanelOrder;
    const double width = 2.0 * w / static_cast<double>(panels);
    for (long p = 0; p < panels; ++p) {
      const double mid = -w + (static_cast<double>(p) + 0.5) * width;
      // Boost stores the non-negative half of the symmetric rule.
      for (std::size_t i = 0; i < abscissa.size(); ++i) {
        const double x = 0.5 * width * abscissa[i];
        const double wt = 0.5 * width * weights[i];
        if (abscissa[i] == 0.0) {
          f.push_back(mid);
          weight.push_back(wt);
        } else {
          f.push_back(mid - x);
          weight.push_back(wt);
          f.push_back(mid + x);
          weight.push_back(wt);
        }
      }
    }
  } else {
    detail::require(nodes >= 2, "trapezoid rule needs at least 2 nodes");
    const double h = 2.0 * w / static_cast<double>(nodes - 1);
    for (long i = 0; i < nodes; ++i) {
      f.push_back(-w + h * static_cast<double>(i));
      weight.push_back(i == 0 || i == nodes - 1 ? 0.5 * h : h);
    }
  }
  std::vector<double> values(f.size());
  parallel_for(static_cast<long>(f.size()),
               [&](long i) { values[static_cast<std::size_t>(i)] = sinusoid_residual(basis, f[static_cast<std::size_t>(i)]); });
  long double total = 0.0L;
  for (std::size_t i = 0; i < f.size(); ++i) total += static_cast<long double>(weight[i]) * values[i];
  return static_cast<double>(total);
}

}  // namespace roast
