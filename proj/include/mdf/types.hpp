#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "mdf/error.hpp"

namespace mdf {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// A modulus tau = tau1 + i tau2 in the upper half-plane.
class UpperHalfPoint {
 public:
  UpperHalfPoint(double tau1, double tau2) : tau1_(tau1), tau2_(tau2) {
    if (!(tau2 > 0.0) || !std::isfinite(tau1) || !std::isfinite(tau2)) {
      throw DomainError("UpperHalfPoint: tau2 must be positive and finite");
    }
  }
  explicit UpperHalfPoint(cplx tau) : UpperHalfPoint(tau.real(), tau.imag()) {}

  double re() const { return tau1_; }
  double im() const { return tau2_; }
  cplx value() const { return {tau1_, tau2_}; }
  double abs() const { return std::hypot(tau1_, tau2_); }

  UpperHalfPoint translate(double n) const { return {tau1_ + n, tau2_}; }
  UpperHalfPoint invert() const { return UpperHalfPoint(-1.0 / value()); }

 private:
  double tau1_;
  double tau2_;
};

/// A torus point z = alpha*tau + beta carried through its real characteristics.
/// Also used for the quasiperiodicity parameter w = A*tau + B.
struct TorusPoint {
  double alpha = 0.0;
  double beta = 0.0;

  cplx on(const UpperHalfPoint& tau) const { return alpha * tau.value() + beta; }

  static TorusPoint from_complex(cplx z, const UpperHalfPoint& tau) {
    const double a = z.imag() / tau.im();
    return {a, z.real() - tau.re() * a};
  }

  bool is_lattice_point(double eps = 1e-13) const {
    return std::abs(alpha - std::round(alpha)) < eps && std::abs(beta - std::round(beta)) < eps;
  }

  /// Representative with both characteristics in [-1/2, 1/2).
  TorusPoint reduced() const {
    return {alpha - std::floor(alpha + 0.5), beta - std::floor(beta + 0.5)};
  }

  bool is_zero() const { return alpha == 0.0 && beta == 0.0; }
};

/// Value of a truncated lattice sum together with its certified truncation bound.
struct EvalResult {
  cplx value{};
  double err_bound = 0.0;
  int radius = 0;
  std::int64_t terms = 0;
};

/// Mass parameter mu > 0.
class MassParameter {
 public:
  explicit MassParameter(double mu) : mu_(mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mass parameter must be positive");
  }
  double value() const { return mu_; }
  operator double() const { return mu_; }

 private:
  double mu_;
};

}  // namespace mdf
