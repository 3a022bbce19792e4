#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "roast/apps/recovery.hpp"
#include "roast/bench/table.hpp"
#include "roast/bench/timing.hpp"
#include "roast/core/dpss.hpp"
#include "roast/core/error.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/signals.hpp"
#include "roast/metrics/checks.hpp"
#include "roast/metrics/snr.hpp"
#include "roast/transform/baselines.hpp"
#include "roast/transform/rank_rules.hpp"
#include "roast/transform/roast_basis.hpp"
#include "roast/transform/serialize.hpp"
#include "roast/version.hpp"

namespace roast {

struct RunConfig {
  std::string command;
  long n = 1024;
  double w = 0.25;
  std::optional<long> r;
  std::optional<long> p;
  RoastMethod method = RoastMethod::svd_fb;
  std::uint64_t seed = 1;
  double eps = 1e-3;
  LogBase log_base = LogBase::natural;
  std::string output_path;
  std::string format;  // empty: the command's default
  long grid = 2048;
  long tones = 10000;
  long r_max = 30;
  std::vector<long> n_list;
  std::optional<long> m;
  long seeds = 10;
  int timing_samples = 20;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> c{"build",          "verify",      "sweep-sinusoid", "bandlimited-snr",
                                          "scaling-bench", "rank-report", "recover"};
  return c;
}

inline std::string default_format(const RunConfig& c) { return c.command == "verify" ? "json" : "csv"; }
inline std::string effective_format(const RunConfig& c) { return c.format.empty() ? default_format(c) : c.format; }

inline std::vector<long> default_scaling_sizes() {
  std::vector<long> s;
  for (long n = 256; n <= 16384; n *= 2) s.push_back(n);
  return s;
}

inline nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j{{"command", c.command},   {"n", c.n},
                   {"w", c.w},               {"method", to_string(c.method)},
                   {"seed", c.seed},         {"eps", c.eps},
                   {"log_base", to_string(c.log_base)},
                   {"format", effective_format(c)},
                   {"grid", c.grid},         {"tones", c.tones},
                   {"r_max", c.r_max},       {"seeds", c.seeds},
                   {"timing_samples", c.timing_samples}};
  j["r"] = c.r ? nlohmann::json(*c.r) : nlohmann::json(nullptr);
  j["p"] = c.p ? nlohmann::json(*c.p) : nlohmann::json(nullptr);
  j["m"] = c.m ? nlohmann::json(*c.m) : nlohmann::json(nullptr);
  j["n_list"] = c.n_list.empty() ? default_scaling_sizes() : c.n_list;
  j["output_path"] = c.output_path;
  return j;
}

/// Rejects inconsistent parameters before any computation.
inline void validate(const RunConfig& c) {
  const auto& cmds = known_commands();
  detail::require(std::find(cmds.begin(), cmds.end(), c.command) != cmds.end(), "unknown command '" + c.command + "'");
  detail::require(c.n >= 2, "--n must be >= 2");
  detail::require(c.w > 0.0 && c.w < 0.5, "--w must lie in (0, 1/2)");
  detail::require(2 * half_band_size(c.n, c.w) + 1 <= c.n, "band too wide for --n");
  detail::require(c.eps > 0.0 && c.eps < 0.5, "--eps must lie in (0, 1/2)");
  const std::string f = effective_format(c);
  detail::require(f == "csv" || f == "json", "--format must be csv or json");
  detail::require(!c.r || *c.r >= 0, "--r must be >= 0");
  detail::require(!c.p || *c.p >= 1, "--p must be >= 1");
  detail::require(c.grid >= 2, "--grid must be >= 2");
  detail::require(c.tones >= 1, "--tones must be >= 1");
  detail::require(c.r_max >= 0, "--r-max must be >= 0");
  detail::require(c.seeds >= 1, "--seeds must be >= 1");
  detail::require(c.timing_samples >= 1, "timing samples must be >= 1");
  for (long n : c.n_list) detail::require(n >= 2 && 2 * half_band_size(n, c.w) + 1 <= n, "invalid size in --n-list");
  const long high = c.n - 2 * half_band_size(c.n, c.w) - 1;
  if (c.command == "build") {
    detail::require(!c.output_path.empty(), "build needs --out");
    if (c.method == RoastMethod::randomized) detail::require(!c.p || *c.p <= high, "--p exceeds the high-band width");
    else detail::require(!c.r || *c.r <= high, "--r exceeds the high-band width");
  }
  if (c.command == "sweep-sinusoid" || c.command == "recover")
    detail::require(!c.r || *c.r <= high, "--r exceeds the high-band width");
  if (c.command == "bandlimited-snr") detail::require(c.r_max <= high, "--r-max exceeds the high-band width");
  if (c.command == "recover" && c.m) {
    detail::require(*c.m >= 2 * half_band_size(c.n, c.w) && *c.m <= c.n, "--m must satisfy 2*floor(n*w) <= m <= n");
  }
}

inline std::vector<std::string> metadata_lines(const RunConfig& c, const std::vector<std::string>& notes = {}) {
  std::vector<std::string> lines{std::string("roast ") + kVersion, "config " + config_to_json(c).dump()};
  for (const auto& s : notes) lines.push_back("note " + s);
  return lines;
}

inline void emit(std::ostream& os, const RunConfig& c, const Table& t, const std::vector<std::string>& notes = {}) {
  if (effective_format(c) == "csv") {
    write_csv(os, t, metadata_lines(c, notes));
  } else {
    nlohmann::json j = table_to_json(t);
    j["version"] = kVersion;
    j["config"] = config_to_json(c);
    j["notes"] = notes;
    os << j.dump(2) << '\n';
  }
}

// ---- build -----------------------------------------------------------------

inline RoastBasis build_from_config(const RunConfig& c) {
  const ProlateOperator op(c.n, c.w);
  if (c.method == RoastMethod::randomized) {
    const long p = c.p.value_or(c.r.value_or(std::max(1L, practical_rank(c.n, 3.0, c.log_base))));
    return build_roast_randomized(op, p, c.seed);
  }
  return build_roast(op, c.r.value_or(practical_rank(c.n, 3.0, c.log_base)), c.method);
}

inline int cmd_build(const RunConfig& c, std::ostream& os) {
  validate(c);
  const RoastBasis b = build_from_config(c);
  save_basis(b, c.output_path);
  Table t{{"n", "w", "r", "method", "dimension", "path"}, {}};
  t.add_row({b.n(), b.w(), b.r(), to_string(b.method()), b.dimension(), c.output_path});
  emit(os, c, t);
  return 0;
}

// ---- verify ----------------------------------------------------------------

/// Bound suite for one RoastBasis sized by the DPSS-capture rule at the
/// given r (the negative-path entry point of `verify --r`).
inline BoundLedger verify_dpss_capture_at(long n, double w, double eps, long r) {
  const ProlateOperator op(n, w);
  const DftBandSplit split = build_band_split(n, w);
  const long kmax = std::min(n, 2 * split.half_band + 1 + static_cast<long>(rank_rules::transition_width_bound(n, eps)) + 2);
  const DpssBasis d = build_dpss(op, kmax);
  const CMat a = fbar_b_matrix(op, split);
  return dpss_capture_report(d, build_roast(op, std::min(r, split.high_size()), RoastMethod::svd_fb), eps, a);
}

/// The default grid: spectrum checks over N in {64, 256, 1024} x W in
/// {0.1, 0.25, 0.4}; basis guarantees at N = 512, W = 1/4.
inline BoundLedger verify_default_suite(std::uint64_t seed = 1) {
  BoundLedger ledger;
  for (long n : {64L, 256L, 1024L}) {
    for (double w : {0.1, 0.25, 0.4}) {
      const ProlateOperator op(n, w);
      const DpssBasis full = build_dpss(op, n);
      ledger.append(trace_identity_report(full));
      for (double eps : {1e-2, 1e-4}) ledger.add(eigenvalue_concentration_report(full.eigenvalues, n, w, eps));
      const SpectrumReport s = singular_decay_report(op);
      double worst = 0.0;
      for (Index l = 0; l < s.singular_values.size(); ++l) worst = std::max(worst, s.singular_values(l) / s.bound_curve(l));
      ledger.add(upper_bound_entry("singular_decay", worst, 1.0,
                                   {{"n", n}, {"w", w}, {"violations", static_cast<long>(s.violations.size())}}));
      for (long r : {5L, 10L, 20L}) {
        BoundEntry e = singular_tail_check(s.singular_values, n, r);
        e.params["w"] = w;
        ledger.add(std::move(e));
      }
    }
  }

  const long n = 512;
  const double w = 0.25;
  const ProlateOperator op(n, w);
  const DftBandSplit split = build_band_split(n, w);
  const CMat a = fbar_b_matrix(op, split);
  const DpssBasis d = build_dpss(op, 2 * split.half_band + 1 + 60);

  const double eps3 = 1e-3;
  ledger.append(dpss_capture_report(d, build_roast(op, rank_rules::dpss_capture(n, eps3), RoastMethod::svd_fb), eps3, a));
  ledger.add(dpss_subspace_angle_report(
      d, build_roast(op, std::min(rank_rules::subspace_angle(n, eps3), split.high_size()), RoastMethod::svd_fb), eps3));

  const RoastBasis q4 = build_roast(op, rank_rules::average_error(n, eps3), RoastMethod::svd_fb);
  {
    const auto m = measure_average_error(op, q4, a);
    const nlohmann::json params{{"n", n}, {"w", w}, {"eps", eps3}, {"r", q4.r()}};
    ledger.add(upper_bound_entry("average_representation_error", m.trace_path / n, eps3, params));
    ledger.add(upper_bound_entry("residual_deflated_sum_bound", m.trace_path, m.deflated_sum, params));
  }
  // Trace/quadrature agreement where the residual is above the double-precision floor of the trace path.
  for (long r : {0L, 5L, 10L, 15L}) {
    const RoastBasis q = build_roast(op, r, RoastMethod::svd_fb);
    const double t = integrated_residual(op, q);
    const double g = integrated_residual_quadrature(q, w);
    ledger.add(upper_bound_entry("trace_quadrature_agreement", relative_gap(t, g), 1e-4,
                                 {{"n", n}, {"w", w}, {"r", r}, {"trace_path", t}, {"quadrature_path", g}}));
  }

  const double eps1 = 1e-1;
  const RoastBasis q5 = build_roast(op, rank_rules::uniform_sinusoid(n, w, eps1), RoastMethod::svd_fb);
  ledger.append(uniform_sinusoid_report(q5, w, eps1, integrated_residual(op, q5)));
  ledger.add(sinusoid_derivative_check(q5, w));
  ledger.add(sinusoid_derivative_check(build_roast(op, 19, RoastMethod::svd_fb), w));

  ledger.append(randomized_expectation_report(op, d, 1e-2, 20, seed));
  ledger.add(trace_inequality_check());
  ledger.add(angle_definition_check());
  return ledger;
}

inline int cmd_verify(const RunConfig& c, std::ostream& os) {
  validate(c);
  const BoundLedger ledger = c.r ? verify_dpss_capture_at(c.n, c.w, c.eps, *c.r) : verify_default_suite(c.seed);
  if (effective_format(c) == "json") {
    nlohmann::json j;
    j["version"] = kVersion;
    j["config"] = config_to_json(c);
    j["ledger"] = ledger;
    os << j.dump(2) << '\n';
  } else {
    Table t{{"theorem_id", "lhs_value", "relation", "rhs_bound", "satisfied", "params"}, {}};
    for (const auto& e : ledger.entries) t.add_row({e.theorem_id, e.lhs_value, e.relation, e.rhs_bound, e.satisfied, e.params.dump()});
    write_csv(os, t, metadata_lines(c));
  }
  return ledger.all_satisfied() ? 0 : 1;
}

// ---- plot data ---------------------------------------------------------------

/// Columns of the four same-dimension projectors used by the SNR sweeps.
struct ComparisonBases {
  SubDftBasis subdft;
  DenseBasis dpss;
  RoastBasis roast;
  RoastBasis roast_randomized;
};

inline ComparisonBases comparison_bases(const ProlateOperator& op, long r, RoastMethod method, std::uint64_t seed) {
  const long low = 2 * half_band_size(op.n(), op.w()) + 1;
  const RoastMethod m = method == RoastMethod::randomized ? RoastMethod::svd_fb : method;
  return {SubDftBasis(op.n(), op.w(), r), DenseBasis(build_dpss(op, low + r).vectors), build_roast(op, r, m),
          r == 0 ? build_roast(op, 0, m) : build_roast_randomized(op, r, seed)};
}

inline std::vector<double> full_band_grid(long g) {
  std::vector<double> f(static_cast<std::size_t>(g));
  for (long i = 0; i < g; ++i) f[static_cast<std::size_t>(i)] = -0.5 + static_cast<double>(i) / static_cast<double>(g - 1);
  return f;
}

struct SweepRow {
  double f = 0.0;
  bool in_band = false;
  double subdft = 0.0, dpss = 0.0, roast = 0.0, roast_randomized = 0.0;
};

inline std::vector<SweepRow> sinusoid_sweep(long n, double w, long r, RoastMethod method, std::uint64_t seed, long grid) {
  const ProlateOperator op(n, w);
  const ComparisonBases b = comparison_bases(op, r, method, seed);
  const auto freqs = full_band_grid(grid);
  std::vector<SweepRow> rows(freqs.size());
  parallel_for(grid, [&](long i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.f = freqs[static_cast<std::size_t>(i)];
    row.in_band = std::abs(row.f) <= w;
    const CVec e = sinusoid_samples(n, row.f);
    row.subdft = residual_snr(b.subdft, e);
    row.dpss = residual_snr(b.dpss, e);
    row.roast = residual_snr(b.roast, e);
    row.roast_randomized = residual_snr(b.roast_randomized, e);
  });
  return rows;
}

inline int cmd_sweep_sinusoid(const RunConfig& c, std::ostream& os) {
  validate(c);
  const long r = c.r.value_or(practical_rank(c.n, 4.0, c.log_base));
  const long dim = 2 * half_band_size(c.n, c.w) + 1 + r;
  detail::require(dim <= c.n, "subspace dimension exceeds n");
  const auto rows = sinusoid_sweep(c.n, c.w, r, c.method, c.seed, c.grid);
  Table t{{"f", "in_band", "snr_subdft_db", "snr_dpss_db", "snr_roast_db", "snr_roast_randomized_db"}, {}};
  for (const auto& s : rows)
    t.add_row({s.f, s.in_band, capped_snr(s.subdft), capped_snr(s.dpss), capped_snr(s.roast), capped_snr(s.roast_randomized)});
  emit(os, c, t,
       {"r=" + std::to_string(r), "dimension=" + std::to_string(dim),
        "frequency grid: " + std::to_string(c.grid) + " uniform points on [-1/2, 1/2]",
        "snr capped at " + format_double(kSnrCapDb) + " dB"});
  return 0;
}

struct BandlimitedRow {
  long r = 0;
  double subdft = 0.0, dpss = 0.0, roast = 0.0, roast_randomized = 0.0;
};

/// SNR vs R for one fixed random bandlimited signal. The deterministic
/// bases for every R are truncations of the largest one, which is exactly
/// what the nested singular/eigen-vector construction gives.
inline std::vector<BandlimitedRow> bandlimited_snr_curve(long n, double w, long r_max, RoastMethod method,
                                                         std::uint64_t seed, long tones) {
  const ProlateOperator op(n, w);
  const DftBandSplit split = build_band_split(n, w);
  const long low = split.low_size();
  const CVec x = random_bandlimited(n, w, tones, seed).samples;
  const RoastMethod m = method == RoastMethod::randomized ? RoastMethod::svd_fb : method;
  const DpssBasis dpss = build_dpss(op, low + r_max);
  const RoastBasis roast_max = build_roast(op, r_max, m);

  std::vector<BandlimitedRow> rows(static_cast<std::size_t>(r_max + 1));
  parallel_for(r_max + 1, [&](long r) {
    BandlimitedRow& row = rows[static_cast<std::size_t>(r)];
    row.r = r;
    row.subdft = residual_snr(SubDftBasis(n, w, r), x);
    row.dpss = residual_snr(DenseBasis(RMat(dpss.vectors.leftCols(low + r))), x);
    row.roast = residual_snr(RoastBasis(split, CMat(roast_max.v().leftCols(r)), m), x);
    const RoastBasis rr = r == 0 ? RoastBasis(split, CMat(split.high_size(), 0), RoastMethod::randomized, 0, seed)
                                 : build_roast_randomized(op, r, seed);
    row.roast_randomized = residual_snr(rr, x);
  });
  return rows;
}

inline int cmd_bandlimited_snr(const RunConfig& c, std::ostream& os) {
  validate(c);
  const auto rows = bandlimited_snr_curve(c.n, c.w, c.r_max, c.method, c.seed, c.tones);
  Table t{{"r", "dimension", "snr_subdft_db", "snr_dpss_db", "snr_roast_db", "snr_roast_randomized_db"}, {}};
  const long low = 2 * half_band_size(c.n, c.w) + 1;
  for (const auto& s : rows)
    t.add_row({s.r, low + s.r, capped_snr(s.subdft), capped_snr(s.dpss), capped_snr(s.roast), capped_snr(s.roast_randomized)});
  emit(os, c, t, {"signal: " + std::to_string(c.tones) + " random tones (desk scale; the reference experiment used 1e5)"});
  return 0;
}

// ---- scaling ----------------------------------------------------------------

inline constexpr long kDenseBenchLimit = 4096;

struct ScalingRow {
  long n = 0;
  long r = 0;
  std::optional<double> roast_apply, roast_precompute, roast_snr;
  double roast_randomized_apply = 0.0, roast_randomized_precompute = 0.0, roast_randomized_snr = 0.0;
  std::optional<double> dpss_apply, dpss_precompute, dpss_snr;
  double subdft_apply = 0.0, subdft_snr = 0.0;
};

/// Timings for one N. The SVD-built ROAST and the DPSS are skipped above
/// 4096; the randomized ROAST runs at every size and shares the apply path.
inline ScalingRow scaling_point(long n, double w, LogBase base, std::uint64_t seed, long tones, int samples) {
  ScalingRow row;
  row.n = n;
  row.r = std::max(1L, practical_rank(n, 3.0, base));
  const ProlateOperator op(n, w);
  const long low = 2 * half_band_size(n, w) + 1;
  const CVec x = random_bandlimited(n, w, tones, seed + static_cast<std::uint64_t>(n)).samples;
  volatile double sink = 0.0;

  std::optional<RoastBasis> rr;
  row.roast_randomized_precompute = once_seconds([&] { rr.emplace(build_roast_randomized(op, row.r, seed)); });
  row.roast_randomized_apply = median_seconds([&] { sink = sink + rr->analysis(x)(0).real(); }, samples);
  row.roast_randomized_snr = residual_snr(*rr, x);

  const SubDftBasis sub(n, w, row.r);
  row.subdft_apply = median_seconds([&] { sink = sink + sub.analysis(x)(0).real(); }, samples);
  row.subdft_snr = residual_snr(sub, x);

  if (n <= kDenseBenchLimit) {
    std::optional<RoastBasis> q;
    row.roast_precompute = once_seconds([&] { q.emplace(build_roast(op, row.r, RoastMethod::svd_fb)); });
    row.roast_apply = median_seconds([&] { sink = sink + q->analysis(x)(0).real(); }, samples);
    row.roast_snr = residual_snr(*q, x);

    std::optional<DpssBasis> d;
    row.dpss_precompute = once_seconds([&] { d.emplace(build_dpss(op, low + row.r)); });
    const DenseBasis db(d->vectors);
    row.dpss_apply = median_seconds([&] { sink = sink + db.analysis(x)(0).real(); }, samples);
    row.dpss_snr = residual_snr(db, x);
  }
  return row;
}

inline int cmd_scaling_bench(const RunConfig& c, std::ostream& os) {
  validate(c);
  const auto sizes = c.n_list.empty() ? default_scaling_sizes() : c.n_list;
  Table t{{"n", "r", "roast_apply_s", "roast_randomized_apply_s", "dpss_apply_s", "subdft_apply_s", "roast_precompute_s",
           "roast_randomized_precompute_s", "dpss_precompute_s", "snr_roast_db", "snr_roast_randomized_db", "snr_dpss_db",
           "snr_subdft_db"},
          {}};
  auto opt = [](const std::optional<double>& v) -> Cell { return v ? Cell(*v) : Cell(std::string()); };
  auto opt_snr = [](const std::optional<double>& v) -> Cell { return v ? Cell(capped_snr(*v)) : Cell(std::string()); };
  for (long n : sizes) {
    const ScalingRow s = scaling_point(n, c.w, c.log_base, c.seed, c.tones, c.timing_samples);
    t.add_row({s.n, s.r, opt(s.roast_apply), s.roast_randomized_apply, opt(s.dpss_apply), s.subdft_apply, opt(s.roast_precompute),
               s.roast_randomized_precompute, opt(s.dpss_precompute), opt_snr(s.roast_snr), capped_snr(s.roast_randomized_snr),
               opt_snr(s.dpss_snr), capped_snr(s.subdft_snr)});
  }
  emit(os, c, t,
       {"apply = analysis Q* x; median of " + std::to_string(c.timing_samples) + " warm samples",
        "precompute = single build", "svd-built ROAST and DPSS skipped above n=" + std::to_string(kDenseBenchLimit),
        "timing columns are not deterministic"});
  return 0;
}

// ---- rank report ---------------------------------------------------------------

inline int cmd_rank_report(const RunConfig& c, std::ostream& os) {
  validate(c);
  const auto sizes = c.n_list.empty() ? default_scaling_sizes() : c.n_list;
  Table t{{"n", "c_n", "roast_r", "fst_r", "dpss_capture_r", "average_error_r"}, {}};
  for (long n : sizes)
    t.add_row({n, c_n(n), practical_rank(n, 3.0, c.log_base), rank_rules::fst_rank(n, 1e-5), rank_rules::dpss_capture(n, c.eps),
               rank_rules::average_error(n, c.eps)});
  emit(os, c, t, {"roast_r = floor(3 log n); fst_r = ceil(3 C_N ln(15/delta)), delta = 1e-5"});
  return 0;
}

// ---- recovery -----------------------------------------------------------------

struct CgComparison {
  RecoveryReport roast;
  RecoveryReport fst_factor;
};

/// Same problem solved through ROAST and through the non-orthogonal
/// FST-analog factor [F, U_r diag(mu_r)] of equal dimension.
inline CgComparison cg_comparison(long n, double w, long m, long r, std::uint64_t seed, double tol = 1e-8) {
  const RecoveryProblem p = make_recovery_problem(n, w, m, seed);
  const ProlateOperator op(n, w);
  const RoastBasis q = build_roast(op, r, RoastMethod::svd_fb);
  const FstAnalog fst(op, r);
  const CMat t1 = fst.left_factor();
  CgComparison out;
  out.roast = recover(p, subspace_model(q), tol);
  out.fst_factor = recover(p, subspace_model(t1), tol);
  return out;
}

inline int cmd_recover(const RunConfig& c, std::ostream& os) {
  validate(c);
  const long r = c.r.value_or(practical_rank(c.n, 3.0, c.log_base));
  const long m = c.m.value_or(3 * c.n / 4);
  Table t{{"seed", "basis", "dimension", "iterations", "converged", "relative_error", "condition_estimate"}, {}};
  for (long s = 0; s < c.seeds; ++s) {
    const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(s);
    for (BasisChoice b : {BasisChoice::dpss, BasisChoice::roast, BasisChoice::roast_randomized, BasisChoice::subdft}) {
      const RecoveryReport rep = recovery_experiment(c.n, c.w, m, b, r, seed);
      t.add_row({static_cast<long>(seed), to_string(b), rep.dimension, rep.iterations, rep.converged, rep.relative_error,
                 rep.condition_estimate});
    }
    const RecoveryProblem p = make_recovery_problem(c.n, c.w, m, seed);
    const FstAnalog fst(ProlateOperator(c.n, c.w), r);
    const CMat t1 = fst.left_factor();
    const RecoveryReport rep = recover(p, subspace_model(t1));
    t.add_row({static_cast<long>(seed), std::string("fst_analog_factor"), rep.dimension, rep.iterations, rep.converged,
               rep.relative_error, rep.condition_estimate});
  }
  emit(os, c, t, {"m=" + std::to_string(m), "r=" + std::to_string(r), "sensing: dense complex Gaussian, variance 1/m"});
  return 0;
}

inline int run_command(const RunConfig& c, std::ostream& os) {
  if (c.command == "build") return cmd_build(c, os);
  if (c.command == "verify") return cmd_verify(c, os);
  if (c.command == "sweep-sinusoid") return cmd_sweep_sinusoid(c, os);
  if (c.command == "bandlimited-snr") return cmd_bandlimited_snr(c, os);
  if (c.command == "scaling-bench") return cmd_scaling_bench(c, os);
  if (c.command == "rank-report") return cmd_rank_report(c, os);
  if (c.command == "recover") return cmd_recover(c, os);
  throw InvalidArgument("unknown command '" + c.command + "'");
}

}  // namespace roast
