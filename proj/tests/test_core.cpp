#include <catch_amalgamated.hpp>

#include <roast/core/band_split.hpp>
#include <roast/core/dpss.hpp>
#include <roast/core/fft.hpp>
#include <roast/core/prolate.hpp>
#include <roast/core/signals.hpp>
#include <roast/core/tridiagonal.hpp>
#include <roast/transform/rank_rules.hpp>

#include "support/oracles.hpp"

using namespace roast;
using Catch::Approx;

TEST_CASE("prolate operator matches the closed form", "[prolate]") {
  const ProlateOperator op(2, 0.25);
  const RMat b = op.dense();
  CHECK(b(0, 0) == Approx(0.5).margin(1e-15));
  CHECK(b(1, 1) == Approx(0.5).margin(1e-15));
  CHECK(b(0, 1) == Approx(1.0 / kPi).margin(1e-15));
  CHECK(b(1, 0) == Approx(1.0 / kPi).margin(1e-15));

  for (double w : {0.1, 0.25, 0.4}) {
    const ProlateOperator o(37, w);
    const RMat d = o.dense();
    CHECK((d - oracle::prolate(37, w)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((d - d.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (long i = 0; i < 37; ++i) CHECK(d(i, i) == 2.0 * w);
  }
  CHECK(ProlateOperator(256, 0.25).trace() == 128.0);
}

TEST_CASE("prolate operator rejects bad parameters", "[prolate]") {
  CHECK_THROWS_AS(ProlateOperator(1, 0.25), InvalidArgument);
  CHECK_THROWS_AS(ProlateOperator(16, 0.0), InvalidArgument);
  CHECK_THROWS_AS(ProlateOperator(16, 0.5), InvalidArgument);
  CHECK_THROWS_AS(ProlateOperator(16, -0.1), InvalidArgument);
  const ProlateOperator op(16, 0.25);
  CHECK_THROWS_AS(op.apply(CVec(CVec::Zero(15))), InvalidArgument);
}

TEST_CASE("fast prolate matvec equals the dense product", "[prolate]") {
  std::mt19937_64 rng(5);
  for (long n : {2L, 3L, 17L, 64L, 512L, 1000L, 1024L}) {
    const ProlateOperator op(n, 0.23);
    CHECK(op.embedding_size() >= static_cast<std::size_t>(2 * n - 1));
    CHECK((op.embedding_size() & (op.embedding_size() - 1)) == 0);
    const oracle::CM b = oracle::prolate(n, 0.23).cast<Complex>();
    const CVec x = oracle::random_cvec(n, rng);
    CHECK((op.apply(x) - b * x).cwiseAbs().maxCoeff() <= 1e-10);
  }
  const ProlateOperator op(64, 0.25);
  CHECK(op.apply(CVec(CVec::Zero(64))).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("FFT plan follows the unnormalized DFT convention", "[fft]") {
  const long n = 12;
  const FftPlan plan(n);
  std::mt19937_64 rng(1);
  const CVec x = oracle::random_cvec(n, rng);
  const CVec y = plan.forward(x);
  for (long k = 0; k < n; ++k) {
    Complex s = 0;
    for (long m = 0; m < n; ++m) s += x(m) * std::polar(1.0, -2.0 * kPi * k * m / n);
    CHECK(std::abs(y(k) - s) < 1e-12);
  }
  CHECK((plan.backward(y) / double(n) - x).norm() < 1e-13);
  CHECK_THROWS_AS(plan.forward(CVec::Zero(5)), InvalidArgument);
}

TEST_CASE("tridiagonal solver agrees with a full eigensolver", "[tridiagonal]") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  SymmetricTridiagonal t;
  const long n = 60;
  t.diag.resize(n);
  t.off.resize(n - 1);
  for (long i = 0; i < n; ++i) t.diag(i) = g(rng);
  for (long i = 0; i + 1 < n; ++i) t.off(i) = g(rng);
  const auto pairs = largest_eigenpairs(t, 10);
  Eigen::SelfAdjointEigenSolver<RMat> es;
  es.computeFromTridiagonal(t.diag, t.off);
  for (long j = 0; j < 10; ++j) {
    CHECK(pairs.values(j) == Approx(es.eigenvalues()(n - 1 - j)).epsilon(1e-12));
    const RVec ref = es.eigenvectors().col(n - 1 - j);
    CHECK(std::abs(std::abs(ref.dot(pairs.vectors.col(j))) - 1.0) < 1e-10);
  }
}

TEST_CASE("DPSS basis invariants", "[dpss]") {
  const DpssBasis d = build_dpss(256, 0.25, 256);
  CHECK(d.eigenvalues.sum() == Approx(128.0).margin(1e-8));
  CHECK(d.eigenvalues(127) >= 0.5);
  CHECK(d.eigenvalues(128) <= 0.5);
  const RMat g = d.vectors.transpose() * d.vectors - RMat::Identity(256, 256);
  CHECK(g.cwiseAbs().maxCoeff() <= 1e-10);
  const ProlateOperator op(256, 0.25);
  for (long l = 0; l < 256; ++l) {
    const RVec s = d.vectors.col(l);
    CHECK((op.apply(s) - d.eigenvalues(l) * s).norm() <= 1e-8);
    for (long i = 0; i < 256; ++i)
      if (std::abs(s(i)) > 1e-12) {
        CHECK(s(i) > 0);
        break;
      }
  }
  // Values within round-off of 0 or 1 cannot be strictly ordered in double;
  // the resolvable middle of the spectrum must be.
  for (long l = 0; l < 256; ++l) {
    CHECK(d.eigenvalues(l) <= 1.0 + 1e-13);
    CHECK(d.eigenvalues(l) >= -1e-13);
    if (l > 0) CHECK(d.eigenvalues(l) <= d.eigenvalues(l - 1) + 1e-13);
    const bool resolvable = d.eigenvalues(l) > 1e-10 && d.eigenvalues(l) < 1 - 1e-10;
    if (l > 0 && resolvable) CHECK(d.eigenvalues(l) < d.eigenvalues(l - 1));
  }
}

TEST_CASE("DPSS vectors match the reference tridiagonal eigensolver", "[dpss]") {
  for (double w : {0.1, 0.25, 0.4}) {
    const long n = 128;
    const auto [lam, v] = oracle::dpss_reference(n, w);
    const DpssBasis d = build_dpss(n, w, n);
    for (long l = 0; l < n; ++l) {
      CHECK((d.vectors.col(l) - v.col(l)).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(std::abs(d.eigenvalues(l) - lam(l)) < 1e-12);
    }
  }
}

TEST_CASE("eigenvalues split at one half and sum to 2NW over the grid", "[dpss]") {
  for (long n : {64L, 256L, 1024L})
    for (double w : {0.1, 0.25, 0.4}) {
      const DpssBasis d = build_dpss(n, w, n);
      const double two_nw = 2.0 * n * w;
      CHECK(std::abs(d.eigenvalues.sum() - two_nw) <= 1e-8);
      const long lo = detail::floor_snap(two_nw) - 1, hi = detail::ceil_snap(two_nw);
      CHECK(d.eigenvalues(lo) >= 0.5);
      CHECK(d.eigenvalues(hi) <= 0.5);
      for (double eps : {1e-2, 1e-4}) {
        long count = 0;
        for (long l = 0; l < n; ++l) count += d.eigenvalues(l) >= eps && d.eigenvalues(l) <= 1 - eps;
        CHECK(count <= rank_rules::transition_width_bound(n, eps));
      }
    }
}

TEST_CASE("DPSS rejects an out-of-range count", "[dpss]") {
  CHECK_THROWS_AS(build_dpss(16, 0.25, 0), InvalidArgument);
  CHECK_THROWS_AS(build_dpss(16, 0.25, 17), InvalidArgument);
}

TEST_CASE("band split index sets", "[band]") {
  const DftBandSplit s = build_band_split(1024, 0.25);
  CHECK(s.low_size() == 513);
  CHECK(s.high_size() == 511);
  CHECK(s.low_indices == oracle::low_bins(1024, 256));
  CHECK(s.high_indices == oracle::high_bins(1024, 256));

  const DftBandSplit small = build_band_split(8, 0.1);
  CHECK(small.low_indices == std::vector<long>{0});
  CHECK(small.high_size() == 7);

  for (long n : {7L, 8L, 33L}) {
    const DftBandSplit b = build_band_split(n, 0.2);
    std::vector<long> all = b.low_indices;
    all.insert(all.end(), b.high_indices.begin(), b.high_indices.end());
    std::sort(all.begin(), all.end());
    for (long k = 0; k < n; ++k) CHECK(all[std::size_t(k)] == k);
    const oracle::CM f = oracle::dft_columns(n, all);
    CHECK((f.adjoint() * f - oracle::CM::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
  // floor(NW) is taken with a small tolerance: 100 * 0.29 is 28.999999999999996.
  CHECK(build_band_split(100, 0.29).half_band == 29);
  CHECK_THROWS_AS(build_band_split(4, 0.5 - 1e-12), InvalidArgument);
}

TEST_CASE("sampled sinusoids", "[signals]") {
  const auto dc = sampled_sinusoid(16, 0.0);
  for (long m = 0; m < 16; ++m) CHECK(dc.samples(m) == Complex(1.0, 0.0));
  const auto e = sampled_sinusoid(8, 0.125);
  for (long m = 0; m < 8; ++m) CHECK(std::abs(e.samples(m) - std::polar(1.0, kPi * m / 4.0)) < 1e-15);
  for (double f : {-0.5, -0.131, 0.0, 0.37, 0.5}) CHECK(sampled_sinusoid(100, f).samples.squaredNorm() == Approx(100.0).epsilon(1e-14));
  CHECK_THROWS_AS(sampled_sinusoid(8, 0.51), InvalidArgument);
}

TEST_CASE("random bandlimited signals", "[signals]") {
  const auto a = random_bandlimited(256, 0.25, 50, 42);
  const auto b = random_bandlimited(256, 0.25, 50, 42);
  CHECK(a.samples == b.samples);
  CHECK(a.samples != random_bandlimited(256, 0.25, 50, 43).samples);

  // One tone is a single sinusoid up to a unit phase.
  const auto one = random_bandlimited(64, 0.25, 1, 3);
  const Complex phase = one.samples(0);
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-14);
  const CVec ratio = one.samples / phase;
  const double f = std::arg(ratio(1)) / (2.0 * kPi);
  CHECK(std::abs(f) <= 0.25);
  CHECK((ratio - oracle::sinusoid(64, f)).norm() < 1e-10);
  CHECK_THROWS_AS(random_bandlimited(64, 0.25, 0, 1), InvalidArgument);
}

TEST_CASE("DPSS projection captures a bandlimited signal", "[signals][dpss]") {
  const long n = 1024;
  const auto x = random_bandlimited(n, 0.25, 10000, 2024).samples;
  const auto [lam, v] = oracle::dpss_reference(n, 0.25);
  const oracle::CM s = v.leftCols(513 + 27).cast<Complex>();
  const CVec proj = s * (s.adjoint() * x);
  CHECK(proj.squaredNorm() / x.squaredNorm() >= 0.999);
}
