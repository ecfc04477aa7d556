#pragma once

#include <array>
#include <complex>

#include "mdf/types.hpp"

namespace mdf {

/// Controls numerical quadrature of integral representations.
struct QuadratureSpec {
  enum class Kind { kDoubleExponential, kLogGrid };
  double tol = 1e-15;
  int max_nodes = 1 << 14;
  Kind kind = Kind::kDoubleExponential;

  void validate() const;
};

/// A value together with an estimate of its absolute error.
struct Estimate {
  cplx value{};
  double err = 0.0;
};

/// A truncated series or product with a bound on the omitted tail (relative for products).
struct SeriesValue {
  cplx value{};
  double tail = 0.0;
  int terms = 0;
};

/// K_nu(x) for complex order and x > 0.
///
/// Computed from the integral (1/2)(x/2)^nu int_0^inf exp(-t - x^2/(4t)) t^(-nu-1) dt,
/// which the substitution t = (x/2) e^(-u) turns into int_0^inf exp(-x cosh u) cosh(nu u) du.
/// The latter is integrated by the trapezoid rule with step halving; the integrand decays
/// doubly exponentially, so the rule converges geometrically in the number of nodes.
Estimate bessel_k(cplx nu, double x, const QuadratureSpec& quad = {});

/// K_nu(x) together with dK_nu/dx from a single quadrature pass.
struct BesselPair {
  cplx k{};
  cplx dk{};
  double err = 0.0;
};
BesselPair bessel_k_pair(cplx nu, double x, const QuadratureSpec& quad = {});

/// {K, K', K'', K'''} at x. Higher derivatives follow from the Bessel equation.
std::array<cplx, 4> bessel_k_derivatives(cplx nu, double x, int order, const QuadratureSpec& quad = {});

/// Gamma function of complex argument (Lanczos approximation with reflection).
cplx gamma(cplx s);

/// Upper incomplete gamma Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt for x > 0.
cplx upper_incomplete_gamma(cplx s, double x);

/// The tail moment int_1^inf t^(a-1) e^(-c t) dt = c^(-a) Gamma(a, c), for c > 0.
cplx tail_moment(cplx a, double c);

/// Jacobi theta_1(z; tau) = -2 q^(1/8) sin(pi z) prod (1-q^n)(1-e^(2 pi i z) q^n)(1-e^(-2 pi i z) q^n).
SeriesValue theta1_series(cplx z, const UpperHalfPoint& tau, double tol = 1e-17);
cplx theta1(cplx z, const UpperHalfPoint& tau);

/// log|theta_1(z; tau)|, evaluated without forming theta_1 itself.
double log_abs_theta1(cplx z, const UpperHalfPoint& tau);

/// theta_3(tau) = sum_n q^(n^2/2).
SeriesValue theta3_series(const UpperHalfPoint& tau, double tol = 1e-17);
cplx theta3(const UpperHalfPoint& tau);

/// Dedekind eta(tau) = q^(1/24) prod (1 - q^n).
SeriesValue eta_series(const UpperHalfPoint& tau, double tol = 1e-17);
cplx eta(const UpperHalfPoint& tau);

/// Both representations of the vacuum-energy constant c_{alpha,m}.
struct CAlphaM {
  Estimate bessel_form;
  Estimate integral_form;
};

/// c_{alpha,m} = (m / 2pi) sum_{l>=1} cos(2 pi l alpha) K_1(2 pi l m) / l.
Estimate c_alpha_m_bessel(double alpha, double m, const QuadratureSpec& quad = {});

/// c_{alpha,m} = (2pi)^-2 sum_{l>=1} cos(2 pi l alpha) int_0^inf exp(-l^2 x - pi^2 m^2 / x) dx.
Estimate c_alpha_m_integral(double alpha, double m, const QuadratureSpec& quad = {});

/// Returns the Bessel form after checking that the integral form agrees within the combined error.
double c_alpha_m(double alpha, double m, const QuadratureSpec& quad = {});

}  // namespace mdf
