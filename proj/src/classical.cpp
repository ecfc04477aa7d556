#include "mdf/classical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mdf/kernels.hpp"
#include "mdf/lattice.hpp"
#include "mdf/special_fns.hpp"

namespace mdf {
namespace {

constexpr double kLatticeEps = 1e-13;

// Integer part split off a torus point so that the remainder lies in the fundamental cell.
struct Split {
  TorusPoint rest;
  double m = 0.0;  // tau-multiple removed
  double n = 0.0;  // unit multiple removed
};

Split split_point(const TorusPoint& p, bool reduce) {
  if (!reduce) return {p, 0.0, 0.0};
  const double m = std::round(p.alpha);
  const double n = std::round(p.beta);
  TorusPoint rest{p.alpha - m, p.beta - n};
  if (std::abs(rest.alpha) < kLatticeEps && std::abs(rest.beta) < kLatticeEps) rest = {0.0, 0.0};
  return {rest, m, n};
}

// Lattice point lambda with w + lambda = 0, if any, for unreduced w.
bool lattice_offset(const TorusPoint& p, int& r, int& l) {
  if (!p.is_lattice_point(kLatticeEps)) return false;
  r = -static_cast<int>(std::lround(p.alpha));
  l = -static_cast<int>(std::lround(p.beta));
  return true;
}

// |I(a, c)| <= e^{-c} / (c - max(0, Re a - 1)) for c beyond that excess.
double tail_moment_bound(double a_re, double c) {
  const double excess = std::max(0.0, a_re - 1.0);
  if (c <= excess + 1.0) return 1e300;
  return std::exp(-c) / (c - excess);
}

std::function<double(double)> continued_majorant(cplx s, double shift, double tau2) {
  const double a1 = s.real();
  const double a2 = 1.0 - s.real();
  return [=](double x) {
    const double y = x - shift;
    if (y <= 0.0) return 1e300;
    const double c = kPi * y * y / tau2;
    return tail_moment_bound(a1, c) + tail_moment_bound(a2, c);
  };
}

struct ContinuedSetup {
  Split w, z;
  bool w_lattice = false, z_lattice = false;
  int wr = 0, wl = 0, zr = 0, zl = 0;  // lattice point cancelling w resp. z
  cplx global_phase = 1.0;
  double shift = 0.0;
};

ContinuedSetup setup_continued(const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, bool reduce) {
  ContinuedSetup st;
  // w only enters through its class modulo the lattice; z through a quasiperiodic phase.
  st.w = split_point(w, reduce);
  st.z = split_point(z, reduce);
  const TorusPoint& wr = st.w.rest;
  st.global_phase = std::exp(kI * kTwoPi * (st.z.n * wr.alpha - st.z.m * wr.beta));
  st.w_lattice = lattice_offset(wr, st.wr, st.wl);
  st.z_lattice = lattice_offset(st.z.rest, st.zr, st.zl);
  st.shift = std::max(std::abs(wr.on(tau)), std::abs(st.z.rest.on(tau)));
  return st;
}

template <class T>
T continued_sum(cplx s, const ContinuedSetup& st, const Coords<T>& c, int radius, std::int64_t* terms) {
  const double A = st.w.rest.alpha, B = st.w.rest.beta;
  const LatticeSum<T> sum = sum_shells<T>(0, radius, [&](int r, int l) {
    const bool skip_w = st.w_lattice && r == st.wr && l == st.wl;
    const bool skip_z = st.z_lattice && r == st.zr && l == st.zl;
    return continued_term(s, A, B, c, r, l, skip_w, skip_z);
  });
  if (terms) *terms = sum.terms;
  return sum.value;
}

cplx pole_terms(cplx s, const ContinuedSetup& st) {
  cplx p = 0.0;
  if (st.w_lattice) {
    if (s == 0.0) throw PoleError("Kronecker-Eisenstein series has a pole at s = 0 for lattice w");
    p -= 1.0 / s;
  }
  if (st.z_lattice) {
    if (s == 1.0) throw PoleError("Kronecker-Eisenstein series has a pole at s = 1 for lattice z");
    // e^{2 pi i Im(w conj(z)) / tau2} with z reduced to the lattice point itself.
    const TorusPoint zl{-static_cast<double>(st.zr), -static_cast<double>(st.zl)};
    p += std::exp(kI * kTwoPi * symplectic(st.w.rest, zl)) / (s - 1.0);
  }
  return p;
}

cplx rest_value(const ContinuedSetup& st, const UpperHalfPoint& tau) { return st.z.rest.on(tau); }

}  // namespace

int eisenstein_continued_radius(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                double tol) {
  const ContinuedSetup st = setup_continued(w, z, tau, true);
  return plan_truncation_majorant(continued_majorant(s, st.shift, tau.im()), tau, tol).radius;
}

namespace {

EvalResult continued_eval(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, double tol,
                          const EisensteinOptions& opt, bool with_poles) {
  if (!(tol > 0.0)) throw DomainError("eisenstein_continued: tolerance must be positive");
  const ContinuedSetup st = setup_continued(w, z, tau, opt.reduce);
  if (st.z_lattice && !opt.allow_lattice_points) {
    throw SingularInputError("eisenstein_continued: z must avoid lattice points");
  }
  const TruncationPlan plan =
      plan_truncation_majorant(continued_majorant(s, st.shift, tau.im()), tau, tol, 1, opt.max_radius);
  const Coords<cplx> c = make_coords(tau, rest_value(st, tau), 0.0);
  EvalResult res;
  cplx v = continued_sum(s, st, c, plan.radius, &res.terms);
  if (with_poles) v += pole_terms(s, st);
  res.value = st.global_phase * v;
  res.radius = plan.radius;
  res.err_bound = plan.certificate.bound + 1e-15 * std::max(1.0, std::abs(v)) * std::sqrt(double(res.terms));
  return res;
}

}  // namespace

EvalResult eisenstein_continued(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                double tol, const EisensteinOptions& opt) {
  return continued_eval(s, w, z, tau, tol, opt, true);
}

EvalResult eisenstein_continued_regular(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                        double tol) {
  EisensteinOptions opt;
  opt.allow_lattice_points = true;
  return continued_eval(s, w, z, tau, tol, opt, false);
}

Jet eisenstein_continued_jet(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, int radius,
                             bool allow_lattice_points) {
  const ContinuedSetup st = setup_continued(w, z, tau, true);
  if (st.z_lattice && !allow_lattice_points) {
    throw SingularInputError("eisenstein_continued: z must avoid lattice points");
  }
  // Expand in the full z and substitute z - m tau - n, so that tau-derivatives are taken at fixed z.
  Coords<Jet> c = make_jet_coords(tau, z.on(tau), 0.0);
  c.z1 = c.z1 - c.tau1 * st.z.m - st.z.n;
  c.z2 = c.z2 - c.tau2 * st.z.m;
  Jet v = continued_sum(s, st, c, radius, nullptr);
  v += Jet(pole_terms(s, st));
  return v * st.global_phase;
}

EvalResult eisenstein_direct(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, double tol,
                             const EisensteinOptions& opt) {
  if (!(s.real() > 1.0)) throw ConvergenceError("eisenstein_direct: needs Re(s) > 1; use eisenstein_continued");
  if (!(tol > 0.0)) throw DomainError("eisenstein_direct: tolerance must be positive");
  const Split ws = split_point(w, opt.reduce);
  const TorusPoint& wr = ws.rest;
  const double A = wr.alpha, B = wr.beta;
  const double tau2 = tau.im();
  const cplx prefactor = gamma(s) * std::pow(cplx(tau2 / kPi), s);
  const double amp = std::abs(prefactor);
  const double p = 2.0 * s.real();
  const double delta = lattice_norm_factor(tau);
  const double shift = std::abs(wr.on(tau));

  // sum_{rho > R} 8 rho (delta rho - shift)^{-p} <= 8 (delta (1 - shift/(delta (R+1))))^{-p} R^{2-p} / (p-2)
  auto bound = [&](int R) {
    const double f = 1.0 - shift / (delta * (R + 1.0));
    if (f <= 0.0) return 1e300;
    return 8.0 * amp * std::pow(delta * f, -p) * std::pow(double(R), 2.0 - p) / (p - 2.0);
  };
  int R = 1;
  while (bound(R) > tol && R < opt.max_radius) R = std::min(opt.max_radius, std::max(R + 1, int(R * 1.25)));
  while (R > 1 && bound(R - 1) <= tol) --R;

  int skip_r = 0, skip_l = 0;
  const bool skip = lattice_offset(wr, skip_r, skip_l);
  // Scale out |.|^{2s} relative to tau2 to keep magnitudes moderate.
  const LatticeSum<cplx> sum = sum_shells<cplx>(
      0, R,
      [&](int r, int l) {
        const double ra = r + A, lb = l + B;
        const double x = ra * tau.re() + lb, y = ra * tau2;
        const double n2 = x * x + y * y;
        const double ang = kTwoPi * (ra * z.beta - lb * z.alpha);
        return std::exp(-s * std::log(n2)) * std::exp(kI * ang);
      },
      [&](int r, int l) { return !(skip && r == skip_r && l == skip_l); });
  EvalResult res;
  res.value = prefactor * sum.value;
  res.radius = R;
  res.terms = sum.terms;
  res.err_bound = bound(R) + 1e-15 * std::abs(res.value);
  if (bound(R) > tol) {
    throw AccuracyError("eisenstein_direct: tolerance needs a radius beyond the budget", res.value.real(),
                        res.value.imag(), res.err_bound);
  }
  return res;
}

cplx kronecker_limit_e1(const TorusPoint& z, const UpperHalfPoint& tau) {
  const TorusPoint zr = split_point(z, true).rest;
  if (zr.is_zero()) throw SingularInputError("kronecker_limit_e1: logarithmic singularity at lattice points");
  const cplx zc = zr.on(tau);
  const double log_eta = std::log(std::abs(eta(tau)));
  const double v = -2.0 * (log_abs_theta1(zc, tau) - log_eta) + kTwoPi * zc.imag() * zc.imag() / tau.im();
  return v;
}

double QuasiperiodicityResidual::max() const {
  return std::max({w_plus_one, w_plus_tau, z_plus_one, z_plus_tau});
}

QuasiperiodicityResidual quasiperiodicity_residual(cplx s, const TorusPoint& w, const TorusPoint& z,
                                                   const UpperHalfPoint& tau, double tol) {
  EisensteinOptions opt;
  opt.reduce = false;
  auto eval = [&](const TorusPoint& ww, const TorusPoint& zz) {
    return eisenstein_continued(s, ww, zz, tau, tol, opt).value;
  };
  const cplx base = eval(w, z);
  const double scale = std::max(std::abs(base), 1e-300);
  QuasiperiodicityResidual q;
  q.w_plus_one = std::abs(eval({w.alpha, w.beta + 1.0}, z) - base) / scale;
  q.w_plus_tau = std::abs(eval({w.alpha + 1.0, w.beta}, z) - base) / scale;
  q.z_plus_one = std::abs(eval(w, {z.alpha, z.beta + 1.0}) - std::exp(kI * kTwoPi * w.alpha) * base) / scale;
  q.z_plus_tau = std::abs(eval(w, {z.alpha + 1.0, z.beta}) - std::exp(-kI * kTwoPi * w.beta) * base) / scale;
  return q;
}

}  // namespace mdf
