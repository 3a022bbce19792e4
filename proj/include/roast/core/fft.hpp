#pragma once

#include <memory>
#include <mutex>
#include <span>

#include <fftw3.h>

#include "roast/core/error.hpp"
#include "roast/core/types.hpp"

namespace roast {

namespace detail {

// The FFTW planner is not reentrant; plan execution on caller-owned arrays is.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

class FftwPlanPair {
 public:
  explicit FftwPlanPair(std::size_t n) : n_(n) {
    std::lock_guard lock(fftw_planner_mutex());
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_ = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_FORWARD, flags);
    backward_ = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, flags);
    fftw_free(in);
    fftw_free(out);
    if (forward_ == nullptr || backward_ == nullptr) throw Error("FFTW failed to create a plan");
  }
  FftwPlanPair(const FftwPlanPair&) = delete;
  FftwPlanPair& operator=(const FftwPlanPair&) = delete;
  ~FftwPlanPair() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }

  std::size_t size() const noexcept { return n_; }
  fftw_plan forward() const noexcept { return forward_; }
  fftw_plan backward() const noexcept { return backward_; }

 private:
  std::size_t n_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

inline fftw_complex* as_fftw(const Complex* p) {
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p));
}

}  // namespace detail

/// Precomputed, immutable transform context for one length. Copies share the
/// underlying plans; execution is safe from any number of threads.
///
/// `forward` computes y[k] = sum_m x[m] exp(-j 2 pi k m / n) and `backward`
/// the conjugate-sign sum. Neither normalizes.
class FftPlan {
 public:
  FftPlan() = default;
  explicit FftPlan(std::size_t n) : plans_(std::make_shared<const detail::FftwPlanPair>(n)) {
    detail::require(n > 0, "FFT length must be positive");
  }

  std::size_t size() const noexcept { return plans_ ? plans_->size() : 0; }

  void forward(std::span<const Complex> in, std::span<Complex> out) const {
    check(in, out);
    fftw_execute_dft(plans_->forward(), detail::as_fftw(in.data()), detail::as_fftw(out.data()));
  }
  void backward(std::span<const Complex> in, std::span<Complex> out) const {
    check(in, out);
    fftw_execute_dft(plans_->backward(), detail::as_fftw(in.data()), detail::as_fftw(out.data()));
  }

  CVec forward(const CVec& x) const {
    CVec y(x.size());
    forward(std::span<const Complex>(x.data(), x.size()), std::span<Complex>(y.data(), y.size()));
    return y;
  }
  CVec backward(const CVec& x) const {
    CVec y(x.size());
    backward(std::span<const Complex>(x.data(), x.size()), std::span<Complex>(y.data(), y.size()));
    return y;
  }

 private:
  void check(std::span<const Complex> in, std::span<Complex> out) const {
    detail::require(plans_ != nullptr, "FFT plan is empty");
    detail::require(in.size() == size() && out.size() == size(), "FFT buffer length mismatch");
    detail::require(in.data() != out.data(), "FFT plan is out-of-place");
  }

  std::shared_ptr<const detail::FftwPlanPair> plans_;
};

}  // namespace roast
