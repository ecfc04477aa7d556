#include "mdf/transforms.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <vector>

#include "mdf/classical.hpp"
#include "mdf/error.hpp"
#include "mdf/lattice.hpp"
#include "mdf/massive.hpp"
#include "mdf/summation.hpp"

namespace mdf {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kMaxSeriesOrder = 16;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;

// Fixed (non-adaptive) Gauss-Kronrod panel for a complex integrand; err is the Kronrod estimate.
template <class F>
Estimate kronrod_panel(const F& f, double a, double b) {
  double err_re = 0.0, err_im = 0.0;
  // Each node is evaluated once and split into real and imaginary parts.
  std::vector<std::pair<double, cplx>> cache;
  auto cached = [&](double x) {
    for (const auto& [xx, v] : cache) {
      if (xx == x) return v;
    }
    const cplx v = f(x);
    cache.emplace_back(x, v);
    return v;
  };
  const double re = Kronrod::integrate([&](double x) { return cached(x).real(); }, a, b, 0, 0.0, &err_re);
  const double im = Kronrod::integrate([&](double x) { return cached(x).imag(); }, a, b, 0, 0.0, &err_im);
  return {cplx(re, im), std::hypot(err_re, err_im)};
}

double lattice_distance(const TorusPoint& z, const UpperHalfPoint& tau) {
  const TorusPoint red = z.reduced();
  double best = 1e300;
  for (int r = -1; r <= 1; ++r) {
    for (int l = -1; l <= 1; ++l) best = std::min(best, std::abs(TorusPoint{red.alpha + r, red.beta + l}.on(tau)));
  }
  return best;
}

// E_n(z, 0; tau) for integer n >= 2 (the second argument sits on the lattice).
cplx shifted_eisenstein(int n, const TorusPoint& z, const UpperHalfPoint& tau) {
  EisensteinOptions opt;
  opt.allow_lattice_points = true;
  return eisenstein_continued(static_cast<double>(n), z, {}, tau, 1e-15, opt).value;
}

// pi mu (1 - gamma - log(pi mu) - E_0^reg(0, z)): the first-order part of the w = 0 expansion.
cplx first_order_w0(const TorusPoint& z, const UpperHalfPoint& tau, double mu) {
  const cplx p0 = eisenstein_continued_regular(0.0, {}, z, tau, 1e-15).value;
  return kPi * mu * (1.0 - kEulerGamma - std::log(kPi * mu) - p0);
}

}  // namespace

void MellinGrid::validate() const {
  if (!(mu_min > 0.0)) throw DomainError("MellinGrid: mu_min must be positive");
  if (mu_max != 0.0 && !(mu_max > mu_min)) throw DomainError("MellinGrid: mu_max must exceed mu_min");
  if (panels_per_decade < 1 || panels_per_unit < 1) throw DomainError("MellinGrid: panel counts must be positive");
  if (!(c > 0.0)) throw DomainError("MellinGrid: contour abscissa must be positive");
  if (!(T > 0.0)) throw DomainError("MellinGrid: cut-off must be positive");
}

SeriesValue power_series(const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, double mu, int N) {
  if (!(mu > 0.0)) throw DomainError("power_series: mu must be positive");
  if (N < 0 || N > kMaxSeriesOrder) throw DomainError("power_series: order must lie in 0..16");
  if (z.is_lattice_point()) throw SingularInputError("power_series: z must avoid lattice points");
  // The transform only sees w modulo the lattice.
  const TorusPoint wr = w.reduced();
  const bool w_zero = wr.is_lattice_point();
  SeriesValue out;
  ComplexSum sum;
  auto coeff = [&](int n) {  // (-pi mu)^n / n!
    double c = 1.0;
    for (int k = 1; k <= n; ++k) c *= -kPi * mu / k;
    return c;
  };
  if (w_zero) {
    sum.add(eisenstein_continued(1.0, {}, z, tau, 1e-15).value);
    const cplx first = first_order_w0(z, tau, mu);
    if (N >= 1) sum.add(first);
    for (int n = 2; n <= N; ++n) sum.add(coeff(n) * shifted_eisenstein(n, z, tau));
    out.tail = N == 0 ? std::abs(first) : std::abs(coeff(N + 1) * shifted_eisenstein(N + 1, z, tau));
  } else {
    // e^{2 pi i Im(w conj z)/tau2} E_0(z, w) = E_1(w, z) by the functional equation.
    const cplx phase = std::exp(kI * kTwoPi * symplectic(wr, z));
    sum.add(eisenstein_continued(1.0, wr, z, tau, 1e-15).value);
    for (int n = 1; n <= N; ++n) {
      sum.add(phase * coeff(n) * eisenstein_continued(static_cast<double>(n), z, wr, tau, 1e-15).value);
    }
    out.tail = std::abs(coeff(N + 1) * eisenstein_continued(static_cast<double>(N + 1), z, wr, tau, 1e-15).value);
  }
  out.value = sum.value();
  out.terms = N + 1;
  return out;
}

Estimate mellin_forward(const TorusPoint& z, const UpperHalfPoint& tau, cplx s, const MellinGrid& grid) {
  grid.validate();
  if (!(s.real() > 0.0)) throw DomainError("mellin_forward: Re(s) must be positive");
  if (z.is_lattice_point()) throw SingularInputError("mellin_forward: z must avoid lattice points");
  const double d = lattice_distance(z, tau);
  // Keep the expansion well inside its disc of convergence mu tau2 < d^2.
  const double mu0 = std::min(grid.mu_min, 0.25 * d * d / tau.im());

  // [0, mu0]: the expansion integrated term by term.
  ComplexSum small;
  const cplx m0s = std::pow(mu0, s);
  small.add(eisenstein_continued(1.0, {}, z, tau, 1e-15).value * m0s / s);
  const cplx p0 = eisenstein_continued_regular(0.0, {}, z, tau, 1e-15).value;
  const cplx s1 = s + 1.0;
  // int_0^mu0 mu^s dmu and int_0^mu0 mu^s log(pi mu) dmu
  const cplx mom = std::pow(mu0, s1) / s1;
  small.add(kPi * (1.0 - kEulerGamma - p0) * mom - kPi * mom * (std::log(kPi * mu0) - 1.0 / s1));
  double series_err = 0.0;
  double c = kPi;  // (pi)^n / n! up to sign
  for (int n = 2;; ++n) {
    c *= kPi / n;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const cplx term = sign * c * shifted_eisenstein(n, z, tau) * std::pow(mu0, s + double(n)) / (s + double(n));
    small.add(term);
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(small.value()))) {
      series_err = 2.0 * std::abs(term);
      break;
    }
    if (n > 80) throw ConvergenceError("mellin_forward: small-mass expansion does not converge");
  }

  // Upper end: |E_{1,mu}(z)| <= E_{1,mu}(0), whose terms are all positive.
  double mu_max = grid.mu_max;
  auto envelope = [&](double mu) { return e1_massive({}, tau, mu, 1e-18).value.real() * std::pow(mu, s.real()); };
  if (mu_max == 0.0) {
    mu_max = std::max(1.0, 10.0 * mu0);
    while (envelope(mu_max) > 1e-17) mu_max *= 2.0;
  }
  const double tail_err = envelope(mu_max) * (1.0 + std::sqrt(mu_max * tau.im()));

  // [mu0, mu_max]: panels in t = log(mu), integrand E_{1,e^t} e^{s t}.
  const double t0 = std::log(mu0), t1 = std::log(mu_max);
  const int panels = std::max(1, static_cast<int>(std::ceil(grid.panels_per_decade * (t1 - t0) / std::log(10.0))));
  const double h = (t1 - t0) / panels;
  auto integrand = [&](double t) {
    const double mu = std::exp(t);
    return e1_massive(z, tau, mu, 1e-15).value * std::exp(s * t);
  };
  ComplexSum body;
  double body_err = 0.0;
  for (int i = 0; i < panels; ++i) {
    const Estimate e = kronrod_panel(integrand, t0 + i * h, t0 + (i + 1) * h);
    body.add(e.value);
    body_err += e.err;
  }
  return {small.value() + body.value(), series_err + tail_err + body_err};
}

Estimate mellin_inverse(const TorusPoint& z, const UpperHalfPoint& tau, double mu, const MellinGrid& grid) {
  grid.validate();
  if (!(mu > 0.0)) throw DomainError("mellin_inverse: mu must be positive");
  if (z.is_lattice_point()) throw SingularInputError("mellin_inverse: z must avoid lattice points");
  auto integrand = [&](double t) {
    const cplx s(grid.c, t);
    return std::pow(kPi * mu, -s) * gamma(s) * eisenstein_continued(s + 1.0, {}, z, tau, 1e-14).value;
  };
  // E_s(0, z) is real on the real axis, so the integrand at -t is the conjugate of that at t and
  // (1/2 pi) int_{-T}^{T} = (1/pi) Re int_0^T.
  const int panels = std::max(1, static_cast<int>(std::ceil(grid.T * grid.panels_per_unit)));
  const double h = grid.T / panels;
  ComplexSum acc;
  double err = 0.0;
  for (int i = 0; i < panels; ++i) {
    const Estimate e = kronrod_panel(integrand, i * h, (i + 1) * h);
    acc.add(e.value);
    err += e.err;
  }
  // Gamma(s) Gamma(s+1) decays like e^{-pi |t|}, which bounds the cut-off tail.
  const double tail = std::abs(integrand(grid.T)) / kPi;
  return {acc.value().real() / kPi, (err + tail) / kPi};
}

EvalResult w_generating(const UpperHalfPoint& tau, double mu, double tol) {
  if (!(mu > 0.0)) throw DomainError("w_generating: mu must be positive");
  if (!(tol > 0.0)) throw DomainError("w_generating: tolerance must be positive");
  // sum* |lambda|^-4 = pi^2 E_2(0, 0) / tau2^2 is split off, leaving summands
  // tau2^2 (2 a |lambda|^2 + a^2) / (|lambda|^4 (|lambda|^2 + a)^2) <= 3 a tau2^2 / |lambda|^6 once |lambda|^2 >= a.
  const double t2 = tau.im();
  const double a = mu * t2;
  const double delta = lattice_norm_factor(tau);
  const double amp = 3.0 * a * t2 * t2;
  const int r_min = static_cast<int>(std::ceil(std::sqrt(a) / delta));
  // sum over rho > R of 8 rho amp (delta rho)^-6 <= 2 amp delta^-6 R^-4
  auto tail_at = [&](int R) { return 2.0 * amp * std::pow(delta, -6.0) * std::pow(double(R), -4.0); };
  int R = std::max(1, r_min);
  while (tail_at(R) > tol) ++R;
  EisensteinOptions opt;
  opt.allow_lattice_points = true;
  const cplx e2 = eisenstein_continued(2.0, {}, {}, tau, 1e-15, opt).value;
  const auto sum = sum_shells<cplx>(1, R, [&](int r, int l) {
    const double n2 = std::norm(TorusPoint{double(r), double(l)}.on(tau));
    const double den = n2 + a;
    return cplx(-t2 * t2 * (2.0 * a * n2 + a * a) / (n2 * n2 * den * den));
  });
  EvalResult res;
  res.value = kPi * kPi * e2.real() + sum.value.real();
  res.radius = R;
  res.terms = static_cast<int>(sum.terms);
  res.err_bound = tail_at(R) + 1e-15 * std::max(1.0, std::abs(res.value)) * std::sqrt(double(sum.terms));
  return res;
}

}  // namespace mdf
