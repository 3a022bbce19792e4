#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"

namespace roast {

/// (4/pi^2) ln(8N) + 6, the width constant of the eigenvalue transition band
/// and of the singular-value decay of F_high* B.
inline double c_n(long n) { return 4.0 / (kPi * kPi) * std::log(8.0 * static_cast<double>(n)) + 6.0; }

namespace rank_rules {

inline long ceil_pos(double x) { return std::max(0L, detail::ceil_snap(x)); }

/// R for which every DPSS vector with lambda >= eps is captured to squared
/// residual eps: ceil(C_N ln(15/eps)).
inline long dpss_capture(long n, double eps) { return ceil_pos(c_n(n) * std::log(15.0 / eps)); }

/// R for the subspace-angle guarantee cos >= sqrt(1-eps): ceil(C_N ln(15N/eps)).
inline long subspace_angle(long n, double eps) {
  return ceil_pos(c_n(n) * std::log(15.0 * static_cast<double>(n) / eps));
}

/// R for the average-error guarantee: ceil(C_N ln(15 C_N/(N eps))) + 1.
inline long average_error(long n, double eps) {
  const double c = c_n(n);
  return std::max(0L, detail::ceil_snap(c * std::log(15.0 * c / (static_cast<double>(n) * eps))) + 1);
}

/// R for the uniform guarantee over in-band sinusoids.
inline long uniform_sinusoid(long n, double w, double eps) {
  const double c = c_n(n);
  const long a = detail::ceil_snap(c * std::log(60.0 * kPi * c / (eps * eps))) + 1;
  const long b = detail::ceil_snap(c * std::log(15.0 * c / (static_cast<double>(n) * w * eps))) + 1;
  return std::max({0L, a, b});
}

/// Sketch widths for the randomized builder.
inline long sketch_dpss_capture(long n, double eps) {
  return ceil_pos(2.0 * c_n(n) * std::log((30.0 + 15.0 * std::numbers::e) / eps)) + 3;
}
inline long sketch_subspace_angle(long n, double eps) {
  return ceil_pos(2.0 * c_n(n) * std::log((30.0 + 15.0 * std::numbers::e) * static_cast<double>(n) / eps)) + 3;
}
inline long sketch_average_error(long n, double eps) {
  const double c = c_n(n);
  return ceil_pos(4.0 / 3.0 * c * std::log(15.0 * std::sqrt(2.0 * c) / eps) + 7.0 / 3.0);
}
inline long sketch_uniform_sinusoid(long n, double w, double eps) {
  const double c = c_n(n);
  const double s = std::sqrt(2.0 * c);
  const long a = ceil_pos(4.0 / 3.0 * c * std::log(60.0 * kPi * static_cast<double>(n) * s / (eps * eps)) + 7.0 / 3.0);
  const long b = ceil_pos(4.0 / 3.0 * c * std::log(15.0 * kPi * s / (w * eps)) + 7.0 / 3.0);
  return std::max(a, b);
}

/// Upper bound on #{l : eps <= lambda_l <= 1-eps}.
inline double transition_width_bound(long n, double eps) { return 2.0 * c_n(n) * std::log(15.0 / eps); }

/// Rank sufficient for ||B - F F* - L|| <= eps.
inline double low_rank_bound(long n, double eps) { return c_n(n) * std::log(15.0 / eps); }

/// Rank of the fast-Slepian-transform factorization at accuracy delta.
inline long fst_rank(long n, double delta = 1e-5) { return ceil_pos(3.0 * c_n(n) * std::log(15.0 / delta)); }

}  // namespace rank_rules

enum class LogBase { natural, base2, base10 };

inline std::string to_string(LogBase b) {
  switch (b) {
    case LogBase::natural: return "natural";
    case LogBase::base2: return "base2";
    case LogBase::base10: return "base10";
  }
  return "unknown";
}

inline LogBase parse_log_base(const std::string& s) {
  if (s == "natural") return LogBase::natural;
  if (s == "base2") return LogBase::base2;
  if (s == "base10") return LogBase::base10;
  throw InvalidArgument("unknown log base '" + s + "'");
}

inline double log_in_base(double x, LogBase b) {
  switch (b) {
    case LogBase::natural: return std::log(x);
    case LogBase::base2: return std::log2(x);
    case LogBase::base10: return std::log10(x);
  }
  return std::log(x);
}

/// floor(factor * log_base(N)), the practical R of the experiments (factor 3
/// for timing, 4 for the sinusoid sweep).
inline long practical_rank(long n, double factor, LogBase base = LogBase::natural) {
  return detail::floor_snap(factor * log_in_base(static_cast<double>(n), base));
}

}  // namespace roast
