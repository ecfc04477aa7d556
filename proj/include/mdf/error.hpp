#pragma once

#include <stdexcept>
#include <string>

namespace mdf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole (Gamma at a non-positive integer, Eisenstein series at s = 0 or 1 on lattice points).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The input sits on a lattice point where the requested representation is singular.
class SingularInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or integral does not converge for the requested parameters.
class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operator or configuration outside what is implemented.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A finite-difference stencil reaches too far for the point (too large, or too close to a lattice point).
class StencilError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested tolerance could not be met within the work budget.
/// Carries the best value found and its error estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_re, double best_im, double err)
      : Error(what), best_re_(best_re), best_im_(best_im), err_(err) {}
  double best_re() const { return best_re_; }
  double best_im() const { return best_im_; }
  double error_estimate() const { return err_; }

 private:
  double best_re_;
  double best_im_;
  double err_;
};

}  // namespace mdf
