// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <roast/bench/commands.hpp>
#include <roast/bench/timing.hpp>
#include <roast/roast.hpp>

using namespace roast;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <class... A>
std::string fmt(const char* f, A... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

const std::vector<long> kGridN{64, 256, 1024};
const std::vector<double> kGridW{0.1, 0.25, 0.4};

Outcome trace_identity() {
  double worst_sum = 0.0;
  bool split_ok = true;
  for (long n : kGridN)
    for (double w : kGridW) {
      const BoundLedger l = trace_identity_report(build_dpss(n, w, n));
      for (const auto& e : l.entries) {
        if (e.theorem_id == "prolate_trace_identity") worst_sum = std::max(worst_sum, e.lhs_value);
        else split_ok = split_ok && e.satisfied;
      }
    }
  return {worst_sum <= 1e-8 && split_ok,
          fmt("max |sum lambda - 2NW| = %.3e (limit 1e-8), half split %s", worst_sum, split_ok ? "holds" : "violated")};
}

Outcome concentration() {
  double worst = 0.0;
  bool ok = true;
  for (long n : kGridN)
    for (double w : kGridW) {
      const RVec lam = build_dpss(n, w, n).eigenvalues;
      for (double eps : {1e-2, 1e-4}) {
        const BoundEntry e = eigenvalue_concentration_report(lam, n, w, eps);
        ok = ok && e.satisfied;
        worst = std::max(worst, e.lhs_value / e.rhs_bound);
      }
    }
  return {ok, fmt("max count / (2 C_N ln(15/eps)) = %.4f", worst)};
}

Outcome singular_decay() {
  double worst = 0.0, worst_tail = 0.0;
  long violations = 0, tail_fail = 0;
  for (long n : kGridN)
    for (double w : kGridW) {
      const SpectrumReport s = singular_decay_report(n, w);
      violations += static_cast<long>(s.violations.size());
      for (Index l = 0; l < s.singular_values.size(); ++l) worst = std::max(worst, s.singular_values(l) / s.bound_curve(l));
      for (long r : {5L, 10L, 20L}) {
        const BoundEntry e = singular_tail_check(s.singular_values, n, r);
        tail_fail += !e.satisfied;
        worst_tail = std::max(worst_tail, e.lhs_value / e.rhs_bound);
      }
    }
  return {violations == 0 && tail_fail == 0,
          fmt("max sigma_l / (15 e^{-l/C_N}) = %.3e, %ld violations; max tail ratio %.3e, %ld tail failures", worst,
              violations, worst_tail, tail_fail)};
}

Outcome dpss_capture() {
  const long n = 512;
  const double w = 0.25, eps = 1e-3;
  const ProlateOperator op(n, w);
  const DpssBasis d = build_dpss(op, 2 * half_band_size(n, w) + 1 + 60);
  const long r = rank_rules::dpss_capture(n, eps);
  const auto m = measure_dpss_capture(d, build_roast(op, r, RoastMethod::svd_fb), eps);
  const long r_angle = std::min(rank_rules::subspace_angle(n, eps), build_band_split(n, w).high_size());
  const double cos_angle = measure_dpss_capture(d, build_roast(op, r_angle, RoastMethod::svd_fb), eps).cos_angle;
  const double worst_vec = m.vector_residuals.maxCoeff();
  const double bound = std::sqrt(1.0 - eps);
  const bool ok = bound_holds(m.projector_capture, eps, "<=") && bound_holds(worst_vec, eps, "<=") &&
                  bound_holds(cos_angle, bound, ">=");
  return {ok, fmt("K=%ld R=%ld: capture %.3e, max vector residual %.3e (limit 1e-3); R=%ld: cos = %.12f (>= %.12f)", m.k, r,
                  m.projector_capture, worst_vec, r_angle, cos_angle, bound)};
}

Outcome average_error() {
  const long n = 512;
  const double w = 0.25, eps = 1e-3;
  const ProlateOperator op(n, w);
  const long r = rank_rules::average_error(n, eps);
  const RoastBasis q = build_roast(op, r, RoastMethod::svd_fb);
  const double t = integrated_residual(op, q);
  const double g = integrated_residual_quadrature(q, w);
  const double gap = relative_gap(t, g);
  const bool ok = bound_holds(t / n, eps, "<=") && gap <= 1e-4;
  return {ok, fmt("R=%ld: trace/N = %.3e (limit 1e-3); trace path %.6e, quadrature path %.6e, relative gap %.3e (limit 1e-4)",
                  r, t / n, t, g, gap)};
}

Outcome uniform_sinusoid() {
  const long n = 512;
  const double w = 0.25, eps = 1e-1;
  const ProlateOperator op(n, w);
  const long r = rank_rules::uniform_sinusoid(n, w, eps);
  const RoastBasis q = build_roast(op, r, RoastMethod::svd_fb);
  const BoundLedger u = uniform_sinusoid_report(q, w, eps, integrated_residual(op, q), 4096);
  const BoundEntry d = sinusoid_derivative_check(q, w, 4096, 1e-5);
  const double worst = u.entries[0].lhs_value;
  return {u.entries[0].satisfied && d.satisfied,
          fmt("R=%ld: max residual/N = %.3e (limit 0.1); max |derivative| = %.3e (limit 2 pi N^2 = %.3e)", r, worst,
              d.lhs_value, d.rhs_bound)};
}

Outcome randomized_expectation() {
  const long n = 512;
  const double w = 0.25, eps = 1e-2;
  const ProlateOperator op(n, w);
  const DpssBasis d = build_dpss(op, 2 * half_band_size(n, w) + 1 + 60);
  const BoundLedger l = randomized_expectation_report(op, d, eps, 20, 1, 4096);
  std::string detail;
  for (const auto& e : l.entries)
    detail += fmt("%s %.3e %s %.3e (p=%ld); ", e.theorem_id.c_str(), e.lhs_value, e.relation.c_str(), e.rhs_bound,
                  e.params["p"].get<long>());
  return {l.all_satisfied(), detail};
}

Outcome fast_path() {
  const long n = 512;
  const RoastBasis b = build_roast(n, 0.25, 19, RoastMethod::svd_fb);
  // Dense Q from explicit DFT columns, independent of the FFT path.
  const DftBandSplit& s = b.split();
  auto column = [n](long k) {
    CVec c(n);
    for (long m = 0; m < n; ++m) c(m) = std::polar(1.0 / std::sqrt(double(n)), 2.0 * kPi * double((k * m) % n) / double(n));
    return c;
  };
  CMat fl(n, s.low_size()), fh(n, s.high_size());
  for (long i = 0; i < s.low_size(); ++i) fl.col(i) = column(s.low_indices[std::size_t(i)]);
  for (long i = 0; i < s.high_size(); ++i) fh.col(i) = column(s.high_indices[std::size_t(i)]);
  CMat q(n, b.dimension());
  q << fl, fh * b.v();
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  auto rand = [&](long len) {
    CVec v(len);
    for (long i = 0; i < len; ++i) v(i) = Complex(g(rng), g(rng));
    return v;
  };
  double worst = 0.0, worst_round = 0.0;
  for (int p = 0; p < 20; ++p) {
    const CVec x = rand(n), c = rand(b.dimension());
    worst = std::max({worst, (b.analysis(x) - q.adjoint() * x).cwiseAbs().maxCoeff(),
                      (b.synthesis(c) - q * c).cwiseAbs().maxCoeff(),
                      (b.project(x) - q * (q.adjoint() * x)).cwiseAbs().maxCoeff()});
    worst_round = std::max(worst_round, (b.analysis(b.synthesis(c)) - c).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-10 && worst_round <= 1e-10,
          fmt("max |fast - dense| = %.3e, max round-trip error = %.3e (limit 1e-10)", worst, worst_round)};
}

Outcome snr_curve_shape() {
  const long n = 1024, r = 27;
  const double w = 0.25;
  const auto rows = sinusoid_sweep(n, w, r, RoastMethod::svd_fb, 1, 2048);
  long in_band = 0, close = 0;
  for (const auto& row : rows) {
    if (!row.in_band) continue;
    ++in_band;
    close += std::abs(capped_snr(row.roast) - capped_snr(row.dpss)) <= 3.0;
  }
  const double frac = double(close) / double(in_band);

  const auto curve = bandlimited_snr_curve(n, w, 30, RoastMethod::svd_fb, 1, 10000);
  bool monotone = true;
  for (std::size_t i = 1; i < curve.size(); ++i) monotone = monotone && curve[i].roast >= curve[i - 1].roast;
  const bool beats = curve.back().roast >= curve.back().subdft;

  const ProlateOperator op(n, w);
  const double fbf = integrated_residual(op, build_roast(op, r, RoastMethod::svd_fbf));
  const double sub = integrated_residual(op, SubDftBasis(n, w, r));
  const bool ok = frac >= 0.95 && monotone && beats && fbf < sub;
  return {ok, fmt("(a) %ld/%ld in-band points within 3 dB (%.4f, need 0.95); (b) monotone %s, SNR(R=30) roast %.2f dB vs "
                  "subdft %.2f dB; (c) residual svd_fbf %.6e < subdft %.6e",
                  close, in_band, frac, monotone ? "yes" : "no", curve.back().roast, curve.back().subdft, fbf, sub)};
}

Outcome scaling() {
  const double w = 0.25;
  auto apply_time = [&](long n) {
    const long r = practical_rank(n, 3.0);
    const RoastBasis b = build_roast_randomized(n, w, r, 1);
    const CVec x = random_bandlimited(n, w, 1000, 5).samples;
    volatile double sink = 0.0;
    return median_seconds([&] { sink = sink + b.analysis(x)(0).real(); }, 20);
  };
  const double a1 = apply_time(1024), a8 = apply_time(8192);
  auto dpss_time = [&](long n) {
    const long k = 2 * half_band_size(n, w) + 1 + practical_rank(n, 3.0);
    const ProlateOperator op(n, w);
    std::vector<double> t;
    for (int i = 0; i < 3; ++i) t.push_back(once_seconds([&] { (void)build_dpss(op, k); }));
    std::sort(t.begin(), t.end());
    return t[1];
  };
  const double d1 = dpss_time(1024), d4 = dpss_time(4096);
  const double ra = a8 / a1, rd = d4 / d1;
  return {ra <= 16.0 && rd >= 8.0,
          fmt("apply t(8192)/t(1024) = %.3e/%.3e = %.2f (limit 16); DPSS precompute t(4096)/t(1024) = %.3f/%.3f = %.2f (need 8)",
              a8, a1, ra, d4, d1, rd)};
}

Outcome cg_conditioning() {
  long wins = 0;
  std::string iters;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CgComparison c = cg_comparison(512, 0.25, 384, 19, seed, 1e-8);
    wins += c.roast.iterations < c.fst_factor.iterations;
    iters += fmt("%ld/%ld ", c.roast.iterations, c.fst_factor.iterations);
  }
  return {wins >= 9, fmt("roast < fst-factor iterations on %ld of 10 seeds (need 9); roast/fst: ", wins) + iters};
}

Outcome small_oracles() {
  const BoundEntry t = trace_inequality_check(100, 8, 12);
  const BoundEntry a = angle_definition_check(50, 16);
  return {t.satisfied && a.satisfied,
          fmt("max |tr(AB*)| / sum sigma(A) sigma(B) = %.6f (<= 1); max angle-definition gap = %.3e (limit 1e-10)", t.lhs_value,
              a.lhs_value)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "trace identity and half split", 30, trace_identity},
      {2, "eigenvalue concentration", 30, concentration},
      {3, "singular value decay", 120, singular_decay},
      {4, "dpss capture", 120, dpss_capture},
      {5, "average representation error", 60, average_error},
      {6, "uniform sinusoid representation", 120, uniform_sinusoid},
      {7, "randomized expectations", 300, randomized_expectation},
      {8, "fast path equivalence", 60, fast_path},
      {9, "snr curve shape", 300, snr_curve_shape},
      {10, "scaling", 600, scaling},
      {11, "cg conditioning", 300, cg_conditioning},
      {12, "small-instance oracles", 60, small_oracles},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %d (%s): %s [%.1f s of %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), dt,
                c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed;
}
