#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "roast/core/dpss.hpp"
#include "roast/core/error.hpp"
#include "roast/core/parallel.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/types.hpp"
#include "roast/metrics/angles.hpp"
#include "roast/metrics/ledger.hpp"
#include "roast/metrics/linalg.hpp"
#include "roast/metrics/residual.hpp"
#include "roast/metrics/spectrum.hpp"
#include "roast/transform/basis.hpp"
#include "roast/transform/rank_rules.hpp"
#include "roast/transform/roast_basis.hpp"

namespace roast {

// ---- prolate spectrum ------------------------------------------------------

/// Needs the full spectrum (k = n): sum of eigenvalues equals 2NW, and the
/// eigenvalue sequence crosses 1/2 between indices floor(2NW)-1 and ceil(2NW).
inline BoundLedger trace_identity_report(const DpssBasis& d) {
  detail::require(d.k == d.n, "trace identity needs the full DPSS spectrum");
  BoundLedger out;
  const nlohmann::json params{{"n", d.n}, {"w", d.w}};
  const double two_nw = 2.0 * static_cast<double>(d.n) * d.w;
  out.add(upper_bound_entry("prolate_trace_identity", std::abs(d.eigenvalues.sum() - two_nw), 1e-8, params));
  const long lo = detail::floor_snap(two_nw) - 1;
  const long hi = detail::ceil_snap(two_nw);
  if (lo >= 0) out.add(lower_bound_entry("eigenvalue_half_split_upper", d.eigenvalues(lo), 0.5, params));
  if (hi < d.n) out.add(upper_bound_entry("eigenvalue_half_split_lower", d.eigenvalues(hi), 0.5, params));
  return out;
}

/// #{l : eps <= lambda_l <= 1-eps} <= 2 C_N ln(15/eps).
inline BoundEntry eigenvalue_concentration_report(const RVec& eigenvalues, long n, double w, double eps) {
  detail::require(eps > 0.0 && eps <= 0.5, "eps must lie in (0, 1/2]");
  long count = 0;
  for (Index l = 0; l < eigenvalues.size(); ++l) count += (eigenvalues(l) >= eps && eigenvalues(l) <= 1.0 - eps);
  return upper_bound_entry("eigenvalue_concentration", static_cast<double>(count), rank_rules::transition_width_bound(n, eps),
                           {{"n", n}, {"w", w}, {"eps", eps}});
}

inline BoundEntry eigenvalue_concentration_report(long n, double w, double eps) {
  return eigenvalue_concentration_report(build_dpss(n, w, n).eigenvalues, n, w, eps);
}

// ---- DPSS capture ----------------------------------------------------------

/// Number of leading DPSS eigenvalues that are >= eps.
inline long dpss_count_above(const DpssBasis& d, double eps) {
  long k = 0;
  while (k < d.k && d.eigenvalues(k) >= eps) ++k;
  detail::require(k < d.k || d.k == d.n, "DPSS basis too short to locate lambda < eps");
  return k;
}

struct DpssCaptureMeasures {
  long k = 0;
  double eta = 0.0;                // ||(I - V V*) F_high* B|| / eps
  double projector_capture = 0.0;  // ||S_K S_K* - Q Q* S_K S_K*||^2
  double cos_angle = 0.0;          // cos of the largest angle between S_K and Q
  RVec vector_residuals;           // ||s_l - Q Q* s_l||^2, l < K
};

/// `fbar_b` may be empty when eta is not wanted.
inline DpssCaptureMeasures measure_dpss_capture(const DpssBasis& d, const RoastBasis& q, double eps,
                                                const CMat* fbar_b = nullptr) {
  DpssCaptureMeasures m;
  m.k = dpss_count_above(d, eps);
  detail::require(m.k >= 1, "no DPSS eigenvalue reaches eps");
  const CMat sk = d.vectors.leftCols(m.k).cast<Complex>();
  CMat resid(sk.rows(), m.k);
  for (long l = 0; l < m.k; ++l) resid.col(l) = sk.col(l) - q.project(sk.col(l));
  m.vector_residuals = resid.colwise().squaredNorm().transpose();
  // ||(I-P) S_K S_K*|| = ||(I-P) S_K|| since S_K has orthonormal columns.
  const double s = spectral_norm(resid);
  m.projector_capture = s * s;
  m.cos_angle = subspace_angle(sk, materialize(q)).largest_angle_cos;
  if (fbar_b != nullptr) {
    CMat deflated = *fbar_b;
    if (q.r() > 0) deflated -= q.v() * (q.v().adjoint() * *fbar_b);
    m.eta = spectral_norm(deflated) / eps;
  }
  return m;
}

/// The deflation-based conclusions (bounded by eta) and the plain-eps
/// conclusions for a basis sized for DPSS capture.
inline BoundLedger dpss_capture_report(const DpssBasis& d, const RoastBasis& q, double eps, const CMat& fbar_b) {
  const auto m = measure_dpss_capture(d, q, eps, &fbar_b);
  const nlohmann::json params{{"n", d.n}, {"w", d.w}, {"eps", eps}, {"k", m.k}, {"r", q.r()}, {"eta", m.eta}};
  const double worst = m.vector_residuals.maxCoeff();
  BoundLedger out;
  out.add(upper_bound_entry("deflation_projector_capture", m.projector_capture, m.eta, params));
  out.add(lower_bound_entry("deflation_subspace_angle", m.cos_angle,
                            std::sqrt(std::max(0.0, 1.0 - static_cast<double>(d.n) * m.eta)), params));
  out.add(upper_bound_entry("deflation_vector_residual", worst, m.eta, params));
  out.add(upper_bound_entry("dpss_projector_capture", m.projector_capture, eps, params));
  out.add(upper_bound_entry("dpss_vector_residual", worst, eps, params));
  return out;
}

inline BoundEntry dpss_subspace_angle_report(const DpssBasis& d, const RoastBasis& q, double eps) {
  const auto m = measure_dpss_capture(d, q, eps);
  return lower_bound_entry("dpss_subspace_angle", m.cos_angle, std::sqrt(1.0 - eps),
                           {{"n", d.n}, {"w", d.w}, {"eps", eps}, {"k", m.k}, {"r", q.r()}});
}

// ---- sinusoid representation -----------------------------------------------

struct AverageErrorMeasures {
  double trace_path = 0.0;
  double quadrature_path = 0.0;
  double deflated_sum = 0.0;  // sum of pi_l
};

inline AverageErrorMeasures measure_average_error(const ProlateOperator& op, const RoastBasis& q, const CMat& fbar_b) {
  AverageErrorMeasures m;
  m.trace_path = integrated_residual(op, q);
  m.quadrature_path = integrated_residual_quadrature(q, op.w());
  m.deflated_sum = deflated_singular_values(fbar_b, q.v()).sum();
  return m;
}

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline BoundLedger average_error_report(const ProlateOperator& op, const RoastBasis& q, double eps, const CMat& fbar_b) {
  const auto m = measure_average_error(op, q, fbar_b);
  const nlohmann::json params{{"n", op.n()},
                              {"w", op.w()},
                              {"eps", eps},
                              {"r", q.r()},
                              {"trace_path", m.trace_path},
                              {"quadrature_path", m.quadrature_path}};
  BoundLedger out;
  out.add(upper_bound_entry("average_representation_error", m.trace_path / static_cast<double>(op.n()), eps, params));
  out.add(upper_bound_entry("trace_quadrature_agreement", relative_gap(m.trace_path, m.quadrature_path), 1e-4, params));
  out.add(upper_bound_entry("residual_deflated_sum_bound", m.trace_path, m.deflated_sum, params));
  return out;
}

/// Uniform in-band grid f_i = -w + 2w i/(g-1).
inline std::vector<double> in_band_grid(double w, long g) {
  detail::require(g >= 2, "grid needs at least 2 points");
  std::vector<double> f(static_cast<std::size_t>(g));
  for (long i = 0; i < g; ++i) f[static_cast<std::size_t>(i)] = -w + 2.0 * w * static_cast<double>(i) / static_cast<double>(g - 1);
  return f;
}

template <OrthonormalBasis B>
RVec sinusoid_residual_profile(const B& basis, const std::vector<double>& freqs) {
  RVec g(static_cast<Index>(freqs.size()));
  parallel_for(static_cast<long>(freqs.size()), [&](long i) { g(i) = sinusoid_residual(basis, freqs[static_cast<std::size_t>(i)]); });
  return g;
}

/// max_f ||e_f - QQ* e_f||^2 / N <= eps, and the pointwise-from-average
/// bound max(2 sqrt(pi) sqrt(I), I/(NW)) with I the integrated residual.
template <OrthonormalBasis B>
BoundLedger uniform_sinusoid_report(const B& basis, double w, double eps, double integrated, long grid = 4096) {
  const long n = basis.n();
  const RVec g = sinusoid_residual_profile(basis, in_band_grid(w, grid)) / static_cast<double>(n);
  const double worst = g.maxCoeff();
  const double i = std::max(0.0, integrated);
  const double from_average = std::max(2.0 * std::sqrt(kPi) * std::sqrt(i), i / (static_cast<double>(n) * w));
  const nlohmann::json params{{"n", n}, {"w", w}, {"eps", eps}, {"grid", grid}, {"integrated_residual", integrated}};
  BoundLedger out;
  out.add(upper_bound_entry("uniform_sinusoid_representation", worst, eps, params));
  out.add(upper_bound_entry("pointwise_from_average_residual", worst, from_average, params));
  return out;
}

/// Central differences of f -> ||e_f - QQ* e_f||^2 on an in-band grid,
/// compared against 2 pi N^2.
template <OrthonormalBasis B>
BoundEntry sinusoid_derivative_check(const B& basis, double w, long grid = 4096, double step = 1e-5) {
  const long n = basis.n();
  detail::require(w >= 1.0 / (4.0 * kPi * static_cast<double>(n)), "derivative bound needs w >= 1/(4 pi n)");
  detail::require(step > 0.0 && step <= 1e-3, "finite-difference step must lie in (0, 1e-3]");
  const auto freqs = in_band_grid(w, grid);
  RVec d(grid);
  parallel_for(grid, [&](long i) {
    const double f = freqs[static_cast<std::size_t>(i)];
    d(i) = (sinusoid_residual(basis, f + step) - sinusoid_residual(basis, f - step)) / (2.0 * step);
  });
  const double bound = 2.0 * kPi * static_cast<double>(n) * static_cast<double>(n);
  return upper_bound_entry("sinusoid_residual_derivative", d.cwiseAbs().maxCoeff(), bound,
                           {{"n", n}, {"w", w}, {"grid", grid}, {"step", step}});
}

// ---- randomized construction, seed averages ---------------------------------

inline long clamp_to_high_band(long p, long n, double w) { return std::min(p, build_band_split(n, w).high_size()); }

/// Seed means of the randomized-basis guarantees, each at its own sketch
/// width (clamped to the high-band width). Seeds are seed0, seed0+1, ...
inline BoundLedger randomized_expectation_report(const ProlateOperator& op, const DpssBasis& d, double eps, long seeds,
                                                 std::uint64_t seed0 = 1, long grid = 4096) {
  const long n = op.n();
  const double w = op.w();
  const long p_capture = clamp_to_high_band(rank_rules::sketch_dpss_capture(n, eps), n, w);
  const long p_angle = clamp_to_high_band(rank_rules::sketch_subspace_angle(n, eps), n, w);
  const long p_average = clamp_to_high_band(rank_rules::sketch_average_error(n, eps), n, w);
  const long p_uniform = clamp_to_high_band(rank_rules::sketch_uniform_sinusoid(n, w, eps), n, w);
  const long k = dpss_count_above(d, eps);
  const auto freqs = in_band_grid(w, grid);

  std::vector<double> capture(static_cast<std::size_t>(seeds)), cosines(static_cast<std::size_t>(seeds)),
      average(static_cast<std::size_t>(seeds));
  std::vector<RVec> vector_res(static_cast<std::size_t>(seeds)), profile(static_cast<std::size_t>(seeds));
  for (long s = 0; s < seeds; ++s) {
    const auto seed = seed0 + static_cast<std::uint64_t>(s);
    const auto us = static_cast<std::size_t>(s);
    const auto m1 = measure_dpss_capture(d, build_roast_randomized(op, p_capture, seed), eps);
    capture[us] = m1.projector_capture;
    vector_res[us] = m1.vector_residuals;
    cosines[us] = measure_dpss_capture(d, build_roast_randomized(op, p_angle, seed), eps).cos_angle;
    average[us] = integrated_residual(op, build_roast_randomized(op, p_average, seed)) / static_cast<double>(n);
    profile[us] = sinusoid_residual_profile(build_roast_randomized(op, p_uniform, seed), freqs) / static_cast<double>(n);
  }
  auto mean = [&](const std::vector<double>& v) {
    long double t = 0;
    for (double x : v) t += x;
    return static_cast<double>(t / static_cast<long double>(v.size()));
  };
  RVec mean_vec = RVec::Zero(k), mean_profile = RVec::Zero(grid);
  for (long s = 0; s < seeds; ++s) {
    mean_vec += vector_res[static_cast<std::size_t>(s)];
    mean_profile += profile[static_cast<std::size_t>(s)];
  }
  mean_vec /= static_cast<double>(seeds);
  mean_profile /= static_cast<double>(seeds);

  auto params = [&](long p) {
    return nlohmann::json{{"n", n}, {"w", w}, {"eps", eps}, {"k", k}, {"p", p}, {"seeds", seeds}, {"seed0", seed0}};
  };
  BoundLedger out;
  out.add(upper_bound_entry("randomized_mean_projector_capture", mean(capture), eps, params(p_capture)));
  out.add(upper_bound_entry("randomized_mean_vector_residual", mean_vec.maxCoeff(), eps, params(p_capture)));
  auto angle_params = params(p_angle);
  angle_params["sqrt_one_minus_eps"] = std::sqrt(1.0 - eps);
  out.add(lower_bound_entry("randomized_mean_subspace_angle", mean(cosines),
                            std::sqrt(std::max(0.0, 1.0 - static_cast<double>(n) * eps)), angle_params));
  out.add(upper_bound_entry("randomized_mean_average_error", mean(average), eps, params(p_average)));
  out.add(upper_bound_entry("randomized_mean_uniform_sinusoid", mean_profile.maxCoeff(), eps, params(p_uniform)));
  return out;
}

// ---- small-instance oracles --------------------------------------------------

inline CMat random_complex_matrix(long rows, long cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CMat a(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) a(i, j) = Complex(normal(rng), normal(rng));
  return a;
}

/// |trace(A B*)| <= sum_m alpha_m beta_m on random M x N pairs; reports the
/// largest ratio of the two sides.
inline BoundEntry trace_inequality_check(long pairs = 100, long m = 8, long n = 12, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (long t = 0; t < pairs; ++t) {
    const CMat a = random_complex_matrix(m, n, rng);
    const CMat b = random_complex_matrix(m, n, rng);
    const double lhs = std::abs((a * b.adjoint()).trace());
    const double rhs = singular_values(a).dot(singular_values(b));
    worst = std::max(worst, lhs / rhs);
  }
  return upper_bound_entry("trace_inequality", worst, 1.0, {{"pairs", pairs}, {"m", m}, {"n", n}, {"seed", seed}});
}

inline CMat random_orthonormal(long n, long k, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMat> qr(random_complex_matrix(n, k, rng));
  return qr.householderQ() * CMat::Identity(n, k);
}

/// Largest |cos| discrepancy between the infimum and principal-angle
/// definitions on random subspaces of C^ambient.
inline BoundEntry angle_definition_check(long trials = 50, long ambient = 16, std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dim(1, ambient - 1);
  double worst = 0.0;
  for (long t = 0; t < trials; ++t) {
    const CMat a = random_orthonormal(ambient, dim(rng), rng);
    const CMat b = random_orthonormal(ambient, dim(rng), rng);
    worst = std::max(worst, std::abs(subspace_angle(a, b).largest_angle_cos - subspace_angle_cos_infimum(a, b)));
  }
  return upper_bound_entry("angle_definition_agreement", worst, 1e-10,
                           {{"trials", trials}, {"ambient", ambient}, {"seed", seed}});
}

}  // namespace roast
