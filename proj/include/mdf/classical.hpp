#pragma once

#include "mdf/jet.hpp"
#include "mdf/types.hpp"

namespace mdf {

/// Options shared by the Kronecker-Eisenstein evaluators.
struct EisensteinOptions {
  /// Reduce w and z to the fundamental cell before summing (quasiperiodic phases are restored
  /// exactly). Disabling it sums around the given representatives, which is what the
  /// quasiperiodicity checks need.
  bool reduce = true;
  /// Accept z on the lattice and add the pole term e(...)/(s-1). A lattice w is always accepted
  /// (w = 0 is the main case) and contributes -1/s.
  bool allow_lattice_points = false;
  int max_radius = 3000;
};

/// E_s(w, z; tau) = Gamma(s) (tau2/pi)^s sum* e^{2 pi i ((r+A) beta - (l+B) alpha)} / |(r+A) tau + l + B|^{2s}
/// for Re(s) > 1, with w = A tau + B and z = alpha tau + beta. Lattice points with w + lambda = 0 are skipped.
EvalResult eisenstein_direct(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                             double tol = 1e-8, const EisensteinOptions& opt = {});

/// Analytic continuation of E_s(w, z; tau) to all s through the split Mellin integral: every lattice
/// point contributes incomplete-gamma terms in pi |w + lambda|^2 / tau2 and pi |z + lambda|^2 / tau2.
EvalResult eisenstein_continued(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                double tol = 1e-13, const EisensteinOptions& opt = {});

/// The continued representation with the pole terms at lattice points left out, i.e.
/// E_s + [w in lattice]/s - [z in lattice] e(...)/(s-1). Regular at s = 0 and s = 1.
EvalResult eisenstein_continued_regular(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                        double tol = 1e-13);

/// Jet of the continued representation in (tau1, tau2, z1, z2) at fixed characteristics of w,
/// summed over shells 0..radius (mu is not involved). Pole terms are included.
Jet eisenstein_continued_jet(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, int radius,
                             bool allow_lattice_points = false);

/// Radius used by eisenstein_continued for the given accuracy.
int eisenstein_continued_radius(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                double tol);

/// Closed form E_1(0, z; tau) = -log|theta_1(z; tau) / eta(tau)|^2 + 2 pi z2^2 / tau2 off the lattice.
cplx kronecker_limit_e1(const TorusPoint& z, const UpperHalfPoint& tau);

/// Relative residuals of the four shift laws:
/// E_s(w+1, z) = E_s(w, z), E_s(w+tau, z) = E_s(w, z), E_s(w, z+1) = e^{2 pi i A} E_s(w, z),
/// E_s(w, z+tau) = e^{-2 pi i B} E_s(w, z).
struct QuasiperiodicityResidual {
  double w_plus_one = 0.0;
  double w_plus_tau = 0.0;
  double z_plus_one = 0.0;
  double z_plus_tau = 0.0;
  double max() const;
};
QuasiperiodicityResidual quasiperiodicity_residual(cplx s, const TorusPoint& w, const TorusPoint& z,
                                                   const UpperHalfPoint& tau, double tol = 1e-13);

/// Im(x conj(y)) / tau2 for x = xa tau + xb and y = ya tau + yb, i.e. xa yb - xb ya.
inline double symplectic(const TorusPoint& x, const TorusPoint& y) { return x.alpha * y.beta - x.beta * y.alpha; }

}  // namespace mdf
