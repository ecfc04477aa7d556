#pragma once

#include <array>
#include <functional>
#include <optional>

#include "mdf/series.hpp"
#include "mdf/special_fns.hpp"
#include "mdf/types.hpp"

namespace mdf {

// ---------------------------------------------------------------------------
// Products

/// log Z_{alpha,beta,m}(tau): sum of principal logarithms of the factors
/// (1 - exp(-2 pi tau2 sqrt(m^2 + (n +- alpha)^2) + 2 pi i (n +- alpha) tau1 +- 2 pi i beta))
/// over n in Z and both signs, minus 8 pi c_{alpha,m} tau2. `tail` bounds the omitted factors.
SeriesValue log_partition_z(double alpha, double beta, double m, const UpperHalfPoint& tau, double tol = 1e-15);

/// Z_{alpha,beta,m}(tau) = exp(log_partition_z).
cplx partition_z(double alpha, double beta, double m, const UpperHalfPoint& tau, double tol = 1e-15);

/// log F_m(t) = -2 pi c_m t + (1/2) log(1 - e^{-2 pi m t}) + sum_{n>=1} log(1 - e^{-2 pi t sqrt(m^2+n^2)}).
SeriesValue log_f_open(double m, double t, double tol = 1e-16);
double f_open(double m, double t, double tol = 1e-16);

/// Integral representation of log F_m(t2):
/// -2 pi t2 c_m - (2 pi / t2) c_{m t2} - (1/4) int_0^inf e^{-pi t2 m^2 / s} (theta3(i s t2) - 1)(theta3(i s / t2) - 1) ds.
Estimate log_f_open_integral(double m, double t2);

// ---------------------------------------------------------------------------
// Radial profiles and families

/// Constants of the profile equation x^2 h'' + gamma x h' + (kappa - nu x^(1/a)) h = 0.
struct ProfileOde {
  double gamma = 0.0;
  double kappa = 0.0;
  double nu = 0.0;
  double a = 1.0;
};

/// A decaying kernel h on (0, inf) with derivatives and a decay certificate:
/// bound(x) >= |h(y)| for all y >= x, bound is nonincreasing and bound(y) <= bound(x) e^{-rate (y - x)}.
struct RadialProfile {
  std::function<std::array<cplx, 4>(double x, int order)> eval;
  std::function<double(double)> bound;
  double rate = 0.0;
  std::optional<ProfileOde> ode;

  /// h(x) = 2 K_s(2 pi x); satisfies the profile equation with (1, -s^2, 4 pi^2, 1/2) for real s.
  static RadialProfile bessel(cplx s);
  /// h(x) = 4 K_1(2 pi x)^2, the square of the e1 kernel 2 K_1(2 pi x).
  static RadialProfile graph_kernel();
  /// A profile given by closed-form derivatives and a declared exponential certificate
  /// |h(x)| <= amplitude e^{-rate x} for x >= x_min; the certificate is validated by sampling.
  static RadialProfile from_function(std::function<std::array<cplx, 4>(double, int)> eval, double rate,
                                     double amplitude, std::optional<ProfileOde> ode = std::nullopt,
                                     double x_min = 0.0);

  /// Throws DomainError unless the certificate holds at sampled points and, when ODE data is
  /// declared, the equation residual vanishes there.
  void validate() const;
  /// Residual of the profile equation at x (zero when no ODE data is declared).
  cplx ode_residual(double x) const;
};

/// Exponents of mu^d tau2^-c sum* |lambda|^{2c} h(mu^a |lambda|^{2b} / tau2^b) e^{2 pi i L Im(lambda conj z) / tau2}.
struct FamilyParams {
  double a = 1.0;
  double b = 1.0;
  cplx c = 0.0;
  cplx d = 0.0;
  int L = 1;

  void validate() const;
};

/// The generalized family through its shell sum, with certified tail.
EvalResult e_general(const RadialProfile& profile, const FamilyParams& params, const TorusPoint& z,
                     const UpperHalfPoint& tau, double mu, double tol = 1e-12);

/// 2 sqrt(mu tau2) sum* K_1(2 pi sqrt(mu/tau2) |lambda|) / |lambda| e^{2 pi i (r beta - l alpha)}.
EvalResult e1_massive(const TorusPoint& z, const UpperHalfPoint& tau, double mu, double tol = 1e-12);

/// 2 sum* (sqrt(mu tau2) / |lambda|)^s K_s(2 pi sqrt(mu/tau2) |lambda|) e^{2 pi i (r beta - l alpha)}.
EvalResult es_massive(cplx s, const TorusPoint& z, const UpperHalfPoint& tau, double mu, double tol = 1e-12);

/// Quasiperiodic version 2 sqrt(mu tau2) sum* K_1(2 pi sqrt(mu/tau2)|w + lambda|)/|w + lambda|
/// e^{2 pi i Im((w + lambda) conj z) / tau2}; the term with w + lambda = 0 is omitted.
EvalResult e1_massive_twisted(const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, double mu,
                              double tol = 1e-12);

/// Parameters that realize es_massive inside the generalized family (h = 2 K_s(2 pi x)).
FamilyParams es_family_params(cplx s);

// ---------------------------------------------------------------------------
// Coefficient triples and equivalence

/// (c0, c1, c2) of c2(mu) d^2/dmu^2 + c1(mu) d/dmu + c0(mu).
struct CoefficientTriple {
  std::function<cplx(double)> c0;
  std::function<cplx(double)> c1;
  std::function<cplx(double)> c2;

  static CoefficientTriple zero();
};

/// Coefficients making Delta_z phi = -(G2 d^2 + G1 d + G0) phi hold for the normalized family
/// [1, a, c, 0, L] built from a profile whose equation has exponent 1/a.
CoefficientTriple jacobi_g_coefficients(const RadialProfile& profile, int L);

/// Coefficients making Delta_tau f = (g2 d^2 + g1 d + g0) f hold for the family [1, b, c, 0, 0].
CoefficientTriple maass_g_coefficients(double b, double c);

/// A smooth function on (0, inf) with derivatives up to order three.
struct SmoothMap {
  std::function<std::array<double, 4>(double)> eval;

  static SmoothMap identity();
  static SmoothMap constant(double v);
  /// scale * mu^p
  static SmoothMap power(double p, double scale = 1.0);
  /// a + b mu
  static SmoothMap affine(double a, double b);
};

/// Coefficients of F_mu = g(mu) f_{phi(mu)} given those of f (holds for both operator equations).
CoefficientTriple conjugate_triple(const CoefficientTriple& base, const SmoothMap& g, const SmoothMap& phi);

/// One summand of the generalized family at lattice point (r, l), as a jet.
Jet family_term_jet(const RadialProfile& profile, const FamilyParams& params, const SeriesPoint& p, int r, int l);

/// Series of the generalized family.
SeriesPtr make_family_series(const RadialProfile& profile, const FamilyParams& params);
/// es_massive as a series (identical terms to es_massive).
SeriesPtr make_es_series(cplx s);
/// F_mu = g(mu) base_{phi(mu)}; g and phi' must not vanish and phi must map (0, inf) onto itself.
SeriesPtr equivalence_transform(SeriesPtr base, const SmoothMap& g, const SmoothMap& phi);

}  // namespace mdf
