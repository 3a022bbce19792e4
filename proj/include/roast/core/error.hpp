#pragma once

#include <stdexcept>
#include <string>

namespace roast {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An iterative method stopped before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double final_residual)
      : Error(what), final_residual_(final_residual) {}
  double final_residual() const noexcept { return final_residual_; }

 private:
  double final_residual_;
};

/// A serialized stream is truncated, inconsistent, or fails its checksum.
class CorruptInput : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace detail
}  // namespace roast
