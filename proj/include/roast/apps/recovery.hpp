#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "roast/core/band_split.hpp"
#include "roast/core/dpss.hpp"
#include "roast/core/error.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/signals.hpp"
#include "roast/core/types.hpp"
#include "roast/transform/baselines.hpp"
#include "roast/transform/basis.hpp"
#include "roast/transform/roast_basis.hpp"

namespace roast {

using LinearOp = std::function<CVec(const CVec&)>;

struct CgResult {
  CVec solution;
  long iterations = 0;
  bool converged = false;
  std::vector<double> residual_history;  // ||r_k|| / ||b||, k = 0..iterations
  std::vector<double> energy_history;    // x_k* A x_k / 2 - Re(x_k* b)
};

/// Conjugate gradient for a Hermitian positive semidefinite action, from
/// x = 0, stopping at ||r|| <= tol ||b|| or after max_iter steps. The
/// energy functional is non-increasing in exact arithmetic.
inline CgResult cgd_solve(const LinearOp& apply, const CVec& rhs, double tol = 1e-8, long max_iter = -1) {
  detail::require(tol > 0.0, "CG tolerance must be positive");
  const long dim = rhs.size();
  if (max_iter < 0) max_iter = 4 * std::max(dim, 1L);
  CgResult out;
  out.solution = CVec::Zero(dim);
  const double bnorm = rhs.norm();
  out.residual_history.push_back(bnorm == 0.0 ? 0.0 : 1.0);
  out.energy_history.push_back(0.0);
  if (bnorm == 0.0) {
    out.converged = true;
    return out;
  }
  CVec r = rhs;
  CVec p = r;
  double rr = r.squaredNorm();
  while (out.iterations < max_iter) {
    const CVec ap = apply(p);
    const double curvature = p.dot(ap).real();
    if (!(curvature > 0.0)) break;  // direction in the null space: no further progress
    const double alpha = rr / curvature;
    out.solution += alpha * p;
    r -= alpha * ap;
    ++out.iterations;
    const double rr_next = r.squaredNorm();
    out.residual_history.push_back(std::sqrt(rr_next) / bnorm);
    out.energy_history.push_back(-0.5 * out.solution.dot(rhs).real() - 0.5 * out.solution.dot(r).real());
    if (std::sqrt(rr_next) <= tol * bnorm) {
      out.converged = true;
      break;
    }
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }
  return out;
}

/// As cgd_solve, but a missed tolerance raises ConvergenceError carrying the
/// final relative residual.
inline CgResult cgd_solve_checked(const LinearOp& apply, const CVec& rhs, double tol = 1e-8, long max_iter = -1) {
  CgResult r = cgd_solve(apply, rhs, tol, max_iter);
  if (!r.converged) {
    throw ConvergenceError("conjugate gradient stopped after " + std::to_string(r.iterations) + " iterations",
                           r.residual_history.back());
  }
  return r;
}

/// Extreme eigenvalues of a Hermitian PSD action by power iteration on A and
/// on (lambda_max I - A), 200 steps each, Rayleigh quotients as estimates.
struct ConditionEstimate {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double condition = 0.0;
};

inline ConditionEstimate estimate_condition(const LinearOp& apply, long dim, int steps = 200, std::uint64_t seed = 3) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto start = [&] {
    CVec v(dim);
    for (long i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
    return CVec(v.normalized());
  };
  ConditionEstimate c;
  CVec v = start();
  for (int it = 0; it < steps; ++it) {
    const CVec av = apply(v);
    c.lambda_max = v.dot(av).real();
    const double nav = av.norm();
    if (nav == 0.0) break;
    v = av / nav;
  }
  c.lambda_max = v.dot(apply(v)).real();
  const double shift = c.lambda_max;
  v = start();
  for (int it = 0; it < steps; ++it) {
    const CVec sv = shift * v - apply(v);
    const double nsv = sv.norm();
    if (nsv == 0.0) break;
    v = sv / nsv;
  }
  c.lambda_min = v.dot(apply(v)).real();
  c.condition = c.lambda_min > 0.0 ? c.lambda_max / c.lambda_min : std::numeric_limits<double>::infinity();
  return c;
}

struct RecoveryProblem {
  long n = 0;
  long m = 0;
  CMat phi;  // m x n
  CVec y;
  CVec truth;
};

/// Dense complex Gaussian sensing matrix, entries of variance 1/M, and a
/// random bandlimited truth. Identity sensing (m must equal n) is a testing
/// override.
inline RecoveryProblem make_recovery_problem(long n, double w, long m, std::uint64_t seed, long tones = 100,
                                             bool identity_sensing = false) {
  const long half = half_band_size(n, w);
  detail::require(m >= 2 * half && m <= n, "sensing rows must satisfy 2*floor(n*w) <= m <= n");
  RecoveryProblem p;
  p.n = n;
  p.m = m;
  if (identity_sensing) {
    detail::require(m == n, "identity sensing needs m == n");
    p.phi = CMat::Identity(n, n);
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0 * static_cast<double>(m)));
    p.phi.resize(m, n);
    for (long j = 0; j < n; ++j)
      for (long i = 0; i < m; ++i) p.phi(i, j) = Complex(normal(rng), normal(rng));
  }
  p.truth = random_bandlimited(n, w, tones, seed ^ 0xa5a5a5a5a5a5a5a5ull).samples;
  p.y = p.phi * p.truth;
  return p;
}

/// A synthesis map alpha -> x and its adjoint; for an orthonormal basis the
/// adjoint is the analysis.
struct SubspaceModel {
  long dimension = 0;
  LinearOp synthesis;
  LinearOp adjoint;
};

template <OrthonormalBasis B>
SubspaceModel subspace_model(const B& basis) {
  return {basis.dimension(), [&basis](const CVec& a) { return CVec(basis.synthesis(a)); },
          [&basis](const CVec& x) { return CVec(basis.analysis(x)); }};
}

inline SubspaceModel subspace_model(const CMat& t) {
  return {static_cast<long>(t.cols()), [&t](const CVec& a) { return CVec(t * a); },
          [&t](const CVec& x) { return CVec(t.adjoint() * x); }};
}

struct RecoveryReport {
  double relative_error = 0.0;
  long iterations = 0;
  bool converged = false;
  double condition_estimate = 0.0;
  long dimension = 0;
  CVec estimate;
};

/// Solves T* Phi* Phi T alpha = T* Phi* y by CG and returns x = T alpha.
inline RecoveryReport recover(const RecoveryProblem& p, const SubspaceModel& model, double tol = 1e-8, long max_iter = -1,
                              bool estimate_conditioning = true) {
  const CMat& phi = p.phi;
  const LinearOp normal = [&](const CVec& a) { return model.adjoint(phi.adjoint() * (phi * model.synthesis(a))); };
  const CVec rhs = model.adjoint(phi.adjoint() * p.y);
  const CgResult cg = cgd_solve(normal, rhs, tol, max_iter);
  RecoveryReport r;
  r.dimension = model.dimension;
  r.iterations = cg.iterations;
  r.converged = cg.converged;
  r.estimate = model.synthesis(cg.solution);
  r.relative_error = (r.estimate - p.truth).norm() / p.truth.norm();
  if (estimate_conditioning) r.condition_estimate = estimate_condition(normal, model.dimension).condition;
  return r;
}

enum class BasisChoice { dpss, roast, roast_randomized, subdft };

inline std::string to_string(BasisChoice b) {
  switch (b) {
    case BasisChoice::dpss: return "dpss";
    case BasisChoice::roast: return "roast";
    case BasisChoice::roast_randomized: return "roast_randomized";
    case BasisChoice::subdft: return "subdft";
  }
  return "unknown";
}

struct RecoveryOptions {
  double tol = 1e-8;
  long max_iter = -1;
  long tones = 100;
  bool identity_sensing = false;
};

/// Recovery through a subspace of dimension 2 floor(NW) + 1 + r.
inline RecoveryReport recovery_experiment(long n, double w, long m, BasisChoice choice, long r, std::uint64_t seed,
                                          const RecoveryOptions& opt = {}) {
  const RecoveryProblem p = make_recovery_problem(n, w, m, seed, opt.tones, opt.identity_sensing);
  const ProlateOperator op(n, w);
  switch (choice) {
    case BasisChoice::dpss: {
      const long k = 2 * half_band_size(n, w) + 1 + r;
      const DenseBasis b(build_dpss(op, k).vectors);
      return recover(p, subspace_model(b), opt.tol, opt.max_iter);
    }
    case BasisChoice::roast: {
      const RoastBasis b = build_roast(op, r, RoastMethod::svd_fb);
      return recover(p, subspace_model(b), opt.tol, opt.max_iter);
    }
    case BasisChoice::roast_randomized: {
      const RoastBasis b = r == 0 ? build_roast(op, 0, RoastMethod::svd_fb) : build_roast_randomized(op, r, seed);
      return recover(p, subspace_model(b), opt.tol, opt.max_iter);
    }
    case BasisChoice::subdft: {
      const SubDftBasis b(n, w, r);
      return recover(p, subspace_model(b), opt.tol, opt.max_iter);
    }
  }
  throw InvalidArgument("unknown basis choice");
}

}  // namespace roast
