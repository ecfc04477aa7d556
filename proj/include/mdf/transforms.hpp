#pragma once

#include "mdf/special_fns.hpp"
#include "mdf/types.hpp"

namespace mdf {

/// Quadrature layout for the Mellin transforms in mu.
struct MellinGrid {
  // Forward transform: below mu_min the integrand is replaced by its power series in mu, which is
  // integrated exactly; [mu_min, mu_max] is covered by Gauss-Legendre panels in log(mu).
  double mu_min = 0.05;
  double mu_max = 0.0;  // 0 selects the point where the integrand is negligible
  int panels_per_decade = 4;
  // Inverse transform: vertical line Re(s) = c, truncated at |Im s| = T, Gauss-Legendre panels of unit height.
  double c = 1.0;
  double T = 40.0;
  int panels_per_unit = 1;

  void validate() const;
};

/// int_0^inf E_{1,mu}(z; tau) mu^{s-1} dmu, to be compared with Gamma(s) pi^-s E_{s+1}(0, z; tau).
Estimate mellin_forward(const TorusPoint& z, const UpperHalfPoint& tau, cplx s, const MellinGrid& grid = {});

/// (1/2 pi i) int_{c - iT}^{c + iT} (pi mu)^-s Gamma(s) E_{s+1}(0, z; tau) ds; `err` bounds the cut-off tail.
Estimate mellin_inverse(const TorusPoint& z, const UpperHalfPoint& tau, double mu, const MellinGrid& grid = {});

/// Partial sum through n = N of the small-mass expansion
/// e^{2 pi i Im(w conj z)/tau2} sum_n (-pi mu)^n / n! E_n(z, w; tau), with the magnitude of the next
/// term as `tail`. For w = 0 the n = 0, 1 terms combine into
/// E_1(0, z) + pi mu (1 - gamma - log(pi mu) - E_0^reg(0, z)), E_0^reg being E_0 without its pole.
SeriesValue power_series(const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, double mu, int N);

/// sum* tau2^2 / (|r tau + l|^2 + mu tau2)^2 with a certified power-law tail.
EvalResult w_generating(const UpperHalfPoint& tau, double mu, double tol = 1e-10);

}  // namespace mdf
