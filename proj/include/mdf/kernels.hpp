#pragma once

// Per-lattice-point summands shared by the plain evaluators and the jet-based
// differential operators. Every formula is written once over T = cplx or Jet.

#include <array>
#include <complex>

#include "mdf/jet.hpp"
#include "mdf/scalar.hpp"
#include "mdf/special_fns.hpp"
#include "mdf/types.hpp"

namespace mdf {

/// Real coordinates (tau1, tau2, z1, z2, mu) at which a summand is expanded.
template <class T>
struct Coords {
  T tau1, tau2, z1, z2, mu;
};

inline Coords<cplx> make_coords(const UpperHalfPoint& tau, cplx z, double mu) {
  return {tau.re(), tau.im(), z.real(), z.imag(), mu};
}

inline Coords<Jet> make_jet_coords(const UpperHalfPoint& tau, cplx z, double mu) {
  return {Jet::variable(Jet::kTau1, tau.re()), Jet::variable(Jet::kTau2, tau.im()),
          Jet::variable(Jet::kZ1, z.real()), Jet::variable(Jet::kZ2, z.imag()), Jet::variable(Jet::kMu, mu)};
}

inline cplx exp_i(cplx x) { return std::exp(kI * x); }
inline Jet exp_i(const Jet& x) { return mdf::exp(x * kI); }
inline cplx sqrt_any(cplx x) { return std::sqrt(x); }
inline Jet sqrt_any(const Jet& x) { return mdf::sqrt(x); }
inline cplx pow_any(cplx x, cplx p) { return std::pow(x, p); }
inline Jet pow_any(const Jet& x, cplx p) { return mdf::pow(x, p); }

/// Characteristic phase 2 pi (r beta - l alpha) with alpha = z2/tau2, beta = z1 - tau1 z2/tau2.
template <class T>
T lattice_phase_angle(const Coords<T>& c, double r, double l) {
  const T alpha = c.z2 / c.tau2;
  const T beta = c.z1 - c.tau1 * alpha;
  return (beta * r - alpha * l) * kTwoPi;
}

/// |r tau + l|^2 / tau2.
template <class T>
T lattice_norm_ratio(const Coords<T>& c, double r, double l) {
  const T x = c.tau1 * r + l;
  const T y = c.tau2 * r;
  return (x * x + y * y) / c.tau2;
}

/// int_1^inf t^(a-1) e^(-c t) dt as a function of c, with c-derivatives (-1)^k I(a+k, c).
inline auto tail_moment_fn(cplx a) {
  return [a](cplx c, int order) {
    std::array<cplx, 4> d{};
    for (int k = 0; k <= order && k < 4; ++k) {
      d[k] = ((k % 2 == 0) ? 1.0 : -1.0) * tail_moment(a + static_cast<double>(k), c.real());
    }
    return d;
  };
}

/// One lattice point of the continued Kronecker-Eisenstein representation with quasiperiodicity
/// characteristics (A, B) of w: the s-piece at w + lambda and the (1-s)-piece at z + lambda.
/// Set skip_w / skip_z to drop a piece whose argument vanishes.
template <class T>
T continued_term(cplx s, double A, double B, const Coords<T>& c, int r, int l, bool skip_w, bool skip_z) {
  T out = T(0.0);
  if (!skip_w) {
    const double ra = r + A, lb = l + B;
    const T x = c.tau1 * ra + lb;
    const T y = c.tau2 * ra;
    const T arg = (x * x + y * y) * kPi / c.tau2;
    const T phase = exp_i(lattice_phase_angle(c, ra, lb));
    out = out + phase * lift(arg, tail_moment_fn(s));
  }
  if (!skip_z) {
    const T x = c.z1 + c.tau1 * static_cast<double>(r) + static_cast<double>(l);
    const T y = c.z2 + c.tau2 * static_cast<double>(r);
    const T arg = (x * x + y * y) * kPi / c.tau2;
    // e^{2 pi i Im(lambda conj(w)) / tau2} = e^{2 pi i (r B - l A)} is constant in (tau, z).
    const cplx phase = std::exp(kI * kTwoPi * (r * B - l * A));
    out = out + lift(arg, tail_moment_fn(1.0 - s)) * phase;
  }
  return out;
}

}  // namespace mdf
