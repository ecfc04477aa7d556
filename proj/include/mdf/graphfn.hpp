#pragma once

#include "mdf/diffops.hpp"
#include "mdf/massive.hpp"
#include "mdf/series.hpp"
#include "mdf/special_fns.hpp"
#include "mdf/types.hpp"

namespace mdf {

// ---------------------------------------------------------------------------
// Massive two-point modular graph function

/// Exponents (1/2, 1/2, -1, 1, 0) used with the profile 4 K_1(2 pi x)^2.
FamilyParams modular_graph_params();

/// 4 mu tau2 sum* K_1(2 pi sqrt(mu / tau2) |r tau + l|)^2 / |r tau + l|^2, the torus average of
/// E_{1,mu}(z) E_{1,mu}(-z). Tends to E_2(0, 0; tau) as mu -> 0.
EvalResult modular_graph_11(const UpperHalfPoint& tau, double mu, double tol = 1e-12);

/// Small-mass behaviour E_2(0, 0; tau) - E_{1,1,mu} = mu (a l^2 + b l + c) + O(mu^2 log^2 mu)
/// with l = log(2 pi sqrt(mu)).
struct GraphSmallMass {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  // Laurent data of sum* (tau2 / |lambda|^2)^s = pi / (s - 1) + k0 + k1 (s - 1) + ...
  double k0 = 0.0;
  double k1 = 0.0;
  double deficit(double mu) const;
};
GraphSmallMass modular_graph_small_mass(const UpperHalfPoint& tau);

/// Massless limit from two masses: the values with the deficit restored are combined to cancel
/// their mu^2 difference. `err` is the size of that correction.
Estimate modular_graph_massless_limit(const UpperHalfPoint& tau, double mu_hi = 1e-2, double mu_lo = 1e-3);

/// The same sum as a differentiable lattice series (z is ignored).
SeriesPtr make_modular_graph_series();

/// int_0^1 int_0^1 E_{1,mu}(z) E_{1,mu}(-z) dalpha dbeta by the n x n periodic trapezoid rule.
Estimate modular_graph_quadrature(const UpperHalfPoint& tau, double mu, int n = 64, double tol = 1e-13);

/// (Delta_{tau,0} - 2 mu d/dmu + mu^2 d^2/dmu^2 + 2) of the graph function, term by term.
OperatorResidual massive_e2_residual(const UpperHalfPoint& tau, double mu, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Helmholtz Green's function on a rectangular torus

/// G = sum over all (r, l) of e^{2 pi i (r beta - l alpha)} / (4 pi^2 (r^2 tau2^2 + l^2) + mu).
/// The massless parts 1/X and mu/X^2 are resummed as E_1 / (4 pi tau2) and E_2 / (16 pi^2 tau2^2);
/// the rest converges like |lambda|^-6. z must avoid the lattice.
EvalResult helmholtz_green(const TorusPoint& z, double tau2, double mu, double tol = 1e-12);
/// Throws UnsupportedError unless tau is purely imaginary.
EvalResult helmholtz_green(const TorusPoint& z, const UpperHalfPoint& tau, double mu, double tol = 1e-12);

/// sum_r e^{2 pi i r beta} sum_l e^{-k sqrt(A_r) |l - alpha|} / (2 sqrt(A_r)) with A_r = 4 pi^2 r^2 tau2^2 + mu
/// and k = exponent_scale. k = 1 is the Poisson resummation of the mode sum over l.
EvalResult helmholtz_resummed(const TorusPoint& z, double tau2, double mu, double tol = 1e-12,
                              double exponent_scale = 1.0);

/// Torus average of G by an n x n midpoint rule applied to the resummed form with the zero-mean
/// massless parts E_1 / (4 pi tau2) - mu E_2 / (16 pi^2 tau2^2) removed. Equals 1 / mu.
Estimate helmholtz_mean(double tau2, double mu, int n = 16, double tol = 1e-12);

/// Both sides of sum_{l >= 1} 1 / (l^2 + m^2) = pi coth(pi m) / (2 m) - 1 / (2 m^2).
struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double err = 0.0;  // bound on the error of lhs
  double residual() const { return lhs - rhs; }
};
IdentityResidual coth_identity(double m);

}  // namespace mdf
