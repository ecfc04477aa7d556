#include "mdf/graphfn.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include "mdf/classical.hpp"
#include "mdf/error.hpp"
#include "mdf/summation.hpp"

namespace mdf {

namespace {

void require_mass(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mass parameter must be positive");
}

void require_tau2(double tau2) {
  if (!(tau2 > 0.0) || !std::isfinite(tau2)) throw DomainError("tau2 must be positive");
}

// sum_l e^{-c |l - a|} for a in [0, 1).
double two_sided_geometric(double c, double a) {
  return (std::exp(-c * a) + std::exp(-c * (1.0 - a))) / -std::expm1(-c);
}

// 1 - (x K_1(x))^2 = -x^2 (log x + c0) + O(x^4 log^2 x).
constexpr double kSmallXLog = 0.5772156649015329 - 0.5 - 0.6931471805599453;

// Finite part at w = -2 of the Mellin transform of 1 - (x K_1(x))^2:
// int_d^inf (1 - (x K_1)^2) x^-3 dx - log(d)^2 / 2 - c0 log(d), where the omitted piece below d is O(d^2 log^2 d).
double graph_kernel_finite_part() {
  const double d = 1e-4;
  auto f = [](double x) {
    if (x > 50.0) return 1.0 / (x * x * x);  // (x K_1(x))^2 < e^-90 there
    const double k = x * bessel_k(1.0, x).value.real();
    return (1.0 - k * k) / (x * x * x);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  double near = 0.0;
  for (double lo = d; lo < 1.0; lo *= 10.0) near += ts.integrate(f, lo, std::min(10.0 * lo, 1.0), 1e-12);
  const double far = es.integrate(f, 1.0, std::numeric_limits<double>::infinity(), 1e-12);
  const double ld = std::log(d);
  return near + far - 0.5 * ld * ld - kSmallXLog * ld;
}

}  // namespace

// ---------------------------------------------------------------------------
// Massive two-point modular graph function

FamilyParams modular_graph_params() { return {0.5, 0.5, -1.0, 1.0, 0}; }

EvalResult modular_graph_11(const UpperHalfPoint& tau, double mu, double tol) {
  return e_general(RadialProfile::graph_kernel(), modular_graph_params(), {}, tau, mu, tol);
}

double GraphSmallMass::deficit(double mu) const {
  const double l = std::log(kTwoPi * std::sqrt(mu));
  return mu * (a * l * l + b * l + c);
}

GraphSmallMass modular_graph_small_mass(const UpperHalfPoint& tau) {
  // Laurent coefficients from the mean of Z(s) - pi / (s - 1) and its quotient by (s - 1) on a circle;
  // Z(s) = pi^s E_s(0, 0; tau) / Gamma(s) has no other singularity.
  const int n = 32;
  const double radius = 0.25;
  EisensteinOptions opt;
  opt.allow_lattice_points = true;
  cplx m0 = 0.0, m1 = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx h = radius * std::exp(kI * (kTwoPi * j / n));
    const cplx s = 1.0 + h;
    const cplx z = std::pow(cplx(kPi), s) / mdf::gamma(s) * eisenstein_continued(s, {}, {}, tau, 1e-15, opt).value;
    const cplx u = z - kPi / h;
    m0 += u;
    m1 += u / h;
  }
  GraphSmallMass out;
  out.k0 = m0.real() / n;
  out.k1 = m1.real() / n;
  // Residue at w = -2 of the Mellin integral: the kernel transform 1/e^2 - c0/e + F, the scale
  // (2 pi sqrt(mu))^-w and Z(2 + w/2) = 2 pi / e + k0 + k1 e / 2 with e = w + 2, divided by pi^2.
  static const double finite = graph_kernel_finite_part();
  out.a = 4.0 * kPi;
  out.b = 4.0 * (kTwoPi * kSmallXLog - out.k0);
  out.c = 4.0 * (kTwoPi * finite - out.k0 * kSmallXLog + 0.5 * out.k1);
  return out;
}

Estimate modular_graph_massless_limit(const UpperHalfPoint& tau, double mu_hi, double mu_lo) {
  require_mass(mu_lo);
  if (!(mu_hi > mu_lo)) throw DomainError("modular_graph_massless_limit: need mu_hi > mu_lo");
  const GraphSmallMass sm = modular_graph_small_mass(tau);
  const double v_hi = modular_graph_11(tau, mu_hi).value.real() + sm.deficit(mu_hi);
  const double v_lo = modular_graph_11(tau, mu_lo).value.real() + sm.deficit(mu_lo);
  const double q = (mu_hi / mu_lo) * (mu_hi / mu_lo);
  const double limit = (q * v_lo - v_hi) / (q - 1.0);
  return {limit, std::abs(limit - v_lo)};
}

SeriesPtr make_modular_graph_series() {
  return make_family_series(RadialProfile::graph_kernel(), modular_graph_params());
}

Estimate modular_graph_quadrature(const UpperHalfPoint& tau, double mu, int n, double tol) {
  require_mass(mu);
  if (n < 2) throw DomainError("modular_graph_quadrature: need at least two nodes per direction");
  ComplexSum acc;
  double err = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const TorusPoint z{double(j) / n, double(k) / n};
      const EvalResult a = e1_massive(z, tau, mu, tol);
      const EvalResult b = e1_massive({-z.alpha, -z.beta}, tau, mu, tol);
      acc.add(a.value * b.value);
      err += a.err_bound * std::abs(b.value) + b.err_bound * std::abs(a.value);
    }
  }
  const double w = 1.0 / (double(n) * n);
  return {acc.value() * w, err * w};
}

OperatorResidual massive_e2_residual(const UpperHalfPoint& tau, double mu, double tol) {
  require_mass(mu);
  return residual_maass(*make_modular_graph_series(), maass_g_coefficients(1.0, -2.0), {tau, {}, mu}, 0.0, tol);
}

// ---------------------------------------------------------------------------
// Helmholtz Green's function

EvalResult helmholtz_green(const TorusPoint& z, double tau2, double mu, double tol) {
  require_tau2(tau2);
  require_mass(mu);
  if (z.reduced().is_lattice_point()) throw SingularInputError("helmholtz_green: z on the lattice");
  const UpperHalfPoint tau(0.0, tau2);
  const EvalResult e1 = eisenstein_continued(1.0, {}, z, tau, 0.1 * tol);
  const EvalResult e2 = eisenstein_continued(2.0, {}, z, tau, 0.1 * tol);
  const double four_pi2 = 4.0 * kPi * kPi;

  // mu^2 sum* e / (X^2 (X + mu)) with X = 4 pi^2 |r tau + l|^2 >= 4 pi^2 m^2 (r^2 + l^2) on shell k,
  // so the part beyond shell R is below mu^2 / (64 pi^6 m^6) * 8 sum_{k > R} k^-5 <= ... 2 / R^4.
  const double m = std::min(tau2, 1.0);
  const double scale = mu * mu / (std::pow(four_pi2, 3) * std::pow(m, 6));
  const int R = std::max(1, int(std::ceil(std::pow(2.0 * scale / (0.5 * tol), 0.25))));
  const TorusPoint zr = z.reduced();
  CompensatedSum rest;
  for (int r = -R; r <= R; ++r) {
    for (int l = -R; l <= R; ++l) {
      if (r == 0 && l == 0) continue;
      const double x = four_pi2 * (double(r) * r * tau2 * tau2 + double(l) * l);
      rest.add(std::cos(kTwoPi * (r * zr.beta - l * zr.alpha)) / (x * x * (x + mu)));
    }
  }
  EvalResult out;
  out.value = 1.0 / mu + e1.value.real() / (4.0 * kPi * tau2) - mu * e2.value.real() / (16.0 * kPi * kPi * tau2 * tau2) +
              mu * mu * rest.value();
  out.err_bound = e1.err_bound / (4.0 * kPi * tau2) + mu * e2.err_bound / (16.0 * kPi * kPi * tau2 * tau2) +
                  2.0 * scale / std::pow(double(R), 4);
  out.radius = R;
  out.terms = std::int64_t(2 * R + 1) * (2 * R + 1) + e1.terms + e2.terms;
  return out;
}

EvalResult helmholtz_green(const TorusPoint& z, const UpperHalfPoint& tau, double mu, double tol) {
  if (tau.re() != 0.0) throw UnsupportedError("helmholtz_green: only rectangular tori (tau1 = 0) are supported");
  return helmholtz_green(z, tau.im(), mu, tol);
}

EvalResult helmholtz_resummed(const TorusPoint& z, double tau2, double mu, double tol, double exponent_scale) {
  require_tau2(tau2);
  require_mass(mu);
  if (!(exponent_scale > 0.0)) throw DomainError("helmholtz_resummed: exponent scale must be positive");
  if (z.reduced().is_lattice_point()) throw SingularInputError("helmholtz_resummed: z on the lattice");
  const double k = exponent_scale;
  const double a0 = z.alpha - std::floor(z.alpha);
  const double beta = z.beta - std::floor(z.beta);

  // The massless part of every r != 0 term, sum_{r >= 1} 2 cos(2 pi r beta) e^{-2 pi r tau2 k D} / (4 pi r tau2)
  // for each distance D = |l - alpha|, is -Re log(1 - e^{-2 pi tau2 k D + 2 pi i beta}) / (2 pi tau2).
  const double rho = std::exp(-kTwoPi * tau2 * k);
  const cplx phase = std::exp(kI * kTwoPi * beta);
  CompensatedSum massless;
  double err = 0.0;
  for (double d0 : {a0, 1.0 - a0}) {
    double x = std::exp(-kTwoPi * tau2 * k * d0);
    for (int j = 0;; ++j, x *= rho) {
      if (x < 1e-18 && j > 0) {
        err += x / ((1.0 - x) * (1.0 - rho)) / (kTwoPi * tau2);
        break;
      }
      massless.add(-std::log(std::abs(1.0 - x * phase)) / (kTwoPi * tau2));
    }
  }

  // What is left decays like mu / a^3 with a = 2 pi r tau2, bounded per r by mu / a^3 once k a >= 4.
  const double pi3 = kPi * kPi * kPi;
  int R = int(std::ceil(std::sqrt(mu / (8.0 * pi3 * std::pow(tau2, 3) * tol))));
  R = std::max(R, int(std::ceil(4.0 / (kTwoPi * tau2 * k))));
  CompensatedSum massive;
  massive.add(two_sided_geometric(k * std::sqrt(mu), a0) / (2.0 * std::sqrt(mu)));
  for (int r = 1; r <= R; ++r) {
    const double a = kTwoPi * r * tau2;
    const double q = std::sqrt(a * a + mu);
    const double diff = two_sided_geometric(k * q, a0) / (2.0 * q) - two_sided_geometric(k * a, a0) / (2.0 * a);
    massive.add(2.0 * std::cos(kTwoPi * r * beta) * diff);
  }
  err += mu / (8.0 * pi3 * std::pow(tau2, 3) * double(R) * R);

  EvalResult out;
  out.value = massless.value() + massive.value();
  out.err_bound = err;
  out.radius = R;
  out.terms = R + 1;
  return out;
}

Estimate helmholtz_mean(double tau2, double mu, int n, double tol) {
  require_tau2(tau2);
  require_mass(mu);
  if (n < 2) throw DomainError("helmholtz_mean: need at least two nodes per direction");
  const UpperHalfPoint tau(0.0, tau2);
  CompensatedSum acc;
  double err = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const TorusPoint z{(j + 0.5) / n, (k + 0.5) / n};
      const EvalResult g = helmholtz_resummed(z, tau2, mu, tol);
      const EvalResult e1 = eisenstein_continued(1.0, {}, z, tau, tol);
      const EvalResult e2 = eisenstein_continued(2.0, {}, z, tau, tol);
      acc.add(g.value.real() - e1.value.real() / (4.0 * kPi * tau2) +
              mu * e2.value.real() / (16.0 * kPi * kPi * tau2 * tau2));
      err = std::max(err, g.err_bound + e1.err_bound / (4.0 * kPi * tau2) +
                              mu * e2.err_bound / (16.0 * kPi * kPi * tau2 * tau2));
    }
  }
  // Aliased modes (n r, n l) of the |lambda|^-6 remainder: sum* (r^2 + l^2)^-3 < 5.
  const double m = std::min(tau2, 1.0);
  err += 5.0 * mu * mu / (std::pow(4.0 * kPi * kPi, 3) * std::pow(m * n, 6));
  return {acc.value() / (double(n) * n), err};
}

IdentityResidual coth_identity(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("coth_identity: m must be positive");
  // Direct sum through L, then Euler-Maclaurin for the rest: int_L^inf f - f(L)/2 - f'(L)/12 + f'''(L)/720.
  const int L = 1000;
  const double m2 = m * m;
  CompensatedSum sum;
  for (int l = L; l >= 1; --l) sum.add(1.0 / (double(l) * l + m2));
  const double x = L, u = x * x + m2;
  const double f = 1.0 / u;
  const double f1 = -2.0 * x / (u * u);
  const double f3 = -24.0 * x * (x * x - m2) / (u * u * u * u);
  sum.add((kPi / 2.0 - std::atan(x / m)) / m - 0.5 * f - f1 / 12.0 + f3 / 720.0);

  IdentityResidual out;
  out.lhs = sum.value();
  out.rhs = kPi / (2.0 * m * std::tanh(kPi * m)) - 1.0 / (2.0 * m2);
  // Next Euler-Maclaurin term f^(5)(L) / 30240 with |f^(5)| <= 120 / L^6, plus rounding.
  out.err = 120.0 / (30240.0 * std::pow(x, 6)) + 4.0 * L * std::numeric_limits<double>::epsilon() * out.lhs;
  return out;
}

}  // namespace mdf
