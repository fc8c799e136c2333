#pragma once

#include <stdexcept>
#include <string>

namespace smhd {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A linear factorisation or solve failed. Usually signals an assembly bug.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// The per-step nonlinear iteration did not reach tolerance.
class NonlinearSolveError : public Error {
 public:
  NonlinearSolveError(const std::string& what, int iterations, double residual)
      : Error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  int iterations_;
  double residual_;
};

/// A magnetic field handed to a routine that needs div B = 0 is not div-free.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, double divergence)
      : Error(what), divergence_(divergence) {}
  double divergence() const { return divergence_; }

 private:
  double divergence_;
};

/// Malformed run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace smhd
