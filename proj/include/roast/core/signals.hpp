#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"

namespace roast {

enum class SignalKind { pure_sinusoid, random_bandlimited };

struct SignalEnsemble {
  long n = 0;
  SignalKind kind = SignalKind::pure_sinusoid;
  double f = 0.0;          // pure_sinusoid
  double w = 0.0;          // random_bandlimited
  long num_tones = 0;      // random_bandlimited
  std::uint64_t seed = 0;  // random_bandlimited
  CVec samples;
};

/// e_f[m] = exp(j 2 pi f m), m = 0..n-1, as a bare vector.
inline CVec sinusoid_samples(long n, double f) {
  CVec x(n);
  for (long m = 0; m < n; ++m) x(m) = std::polar(1.0, 2.0 * kPi * f * static_cast<double>(m));
  return x;
}

inline SignalEnsemble sampled_sinusoid(long n, double f) {
  detail::require(n >= 1, "signal length must be positive");
  detail::require(f >= -0.5 && f <= 0.5, "frequency must lie in [-1/2, 1/2]");
  SignalEnsemble s;
  s.n = n;
  s.kind = SignalKind::pure_sinusoid;
  s.f = f;
  s.samples = sinusoid_samples(n, f);
  return s;
}

/// Sum of num_tones unit-magnitude tones with frequencies uniform on [-w, w]
/// and uniform random phases. Draw order per tone: frequency, then phase.
inline SignalEnsemble random_bandlimited(long n, double w, long num_tones, std::uint64_t seed) {
  detail::require(n >= 1, "signal length must be positive");
  detail::require(w > 0.0 && w < 0.5, "half-bandwidth w must lie in (0, 1/2)");
  detail::require(num_tones >= 1, "num_tones must be >= 1");
  SignalEnsemble s;
  s.n = n;
  s.kind = SignalKind::random_bandlimited;
  s.w = w;
  s.num_tones = num_tones;
  s.seed = seed;
  s.samples = CVec::Zero(n);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> freq(-w, w);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  for (long t = 0; t < num_tones; ++t) {
    const double f = freq(rng);
    const double p = phase(rng);
    for (long m = 0; m < n; ++m) s.samples(m) += std::polar(1.0, p + 2.0 * kPi * f * static_cast<double>(m));
  }
  return s;
}

}  // namespace roast
