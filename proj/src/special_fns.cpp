#include "mdf/special_fns.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "mdf/summation.hpp"

namespace mdf {

void QuadratureSpec::validate() const {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (max_nodes < 16) throw DomainError("quadrature node budget must be at least 16");
}

namespace {

// Truncation point of the cosh-integral: beyond u_max the scaled integrand
// exp(-x (cosh u - 1)) |cosh(nu u)| is below exp(-margin).
double cosh_cutoff(double x, double nu_re, double margin) {
  const double a = std::abs(nu_re);
  double u = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double next = std::acosh(1.0 + (margin + a * u + 1.0) / x);
    if (std::abs(next - u) < 1e-12) break;
    u = next;
  }
  return std::max(u, 1.0);
}

}  // namespace

BesselPair bessel_k_pair(cplx nu, double x, const QuadratureSpec& quad) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k: x must be positive");
  quad.validate();
  const double u_max = cosh_cutoff(x, nu.real(), 50.0);

  // Scaled integrands: g0 = e^{-x(cosh u - 1)} cosh(nu u), g1 = cosh(u) g0.
  auto integrand = [&](double u, cplx& g0, cplx& g1) {
    const double ch = std::cosh(u);
    const double w = std::exp(-x * (ch - 1.0));
    g0 = w * std::cosh(nu * u);
    g1 = ch * g0;
  };

  double h = std::min(0.5, u_max / 8.0);
  int n = static_cast<int>(std::ceil(u_max / h));
  cplx s0, s1;
  integrand(0.0, s0, s1);
  s0 *= 0.5;
  s1 *= 0.5;
  for (int k = 1; k <= n; ++k) {
    cplx g0, g1;
    integrand(k * h, g0, g1);
    s0 += g0;
    s1 += g1;
  }
  cplx prev0 = h * s0, prev1 = h * s1;
  int nodes = n + 1;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 0; level < 30; ++level) {
    h *= 0.5;
    n *= 2;
    for (int k = 1; k <= n; k += 2) {
      cplx g0, g1;
      integrand(k * h, g0, g1);
      s0 += g0;
      s1 += g1;
    }
    nodes += n / 2;
    const cplx cur0 = h * s0, cur1 = h * s1;
    err = std::max(std::abs(cur0 - prev0), std::abs(cur1 - prev1) / std::max(1.0, std::cosh(u_max)));
    prev0 = cur0;
    prev1 = cur1;
    const double scale = std::max(1e-300, std::abs(cur0));
    if (level >= 1 && err <= quad.tol * std::max(1.0, scale)) break;
    if (nodes > quad.max_nodes) {
      const double ex = std::exp(-x);
      throw AccuracyError("bessel_k: tolerance not reached within node budget", (cur0 * ex).real(),
                          (cur0 * ex).imag(), err * ex);
    }
  }
  const double ex = std::exp(-x);
  // The truncated tail is below e^-50 relative to the peak of the scaled integrand.
  const double trunc = std::exp(-50.0) * std::abs(prev0);
  return {prev0 * ex, -prev1 * ex, (err + trunc) * ex};
}

Estimate bessel_k(cplx nu, double x, const QuadratureSpec& quad) {
  const BesselPair p = bessel_k_pair(nu, x, quad);
  return {p.k, p.err};
}

std::array<cplx, 4> bessel_k_derivatives(cplx nu, double x, int order, const QuadratureSpec& quad) {
  std::array<cplx, 4> d{};
  if (order <= 0) {
    d[0] = bessel_k(nu, x, quad).value;
    return d;
  }
  const BesselPair p = bessel_k_pair(nu, x, quad);
  d[0] = p.k;
  d[1] = p.dk;
  // x^2 K'' + x K' - (x^2 + nu^2) K = 0
  const cplx nu2 = nu * nu;
  const double x2 = x * x;
  d[2] = ((x2 + nu2) * d[0] - x * d[1]) / x2;
  // Differentiate once more: x^2 K''' + 3x K'' + K' - 2x K - (x^2 + nu^2) K' = 0
  d[3] = (-3.0 * x * d[2] - d[1] + 2.0 * x * d[0] + (x2 + nu2) * d[1]) / x2;
  return d;
}

// ---------------------------------------------------------------------------
// Gamma

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gamma_lanczos(cplx s) {
  s -= 1.0;
  cplx a = kLanczosCoeff[0];
  const cplx t = s + kLanczosG + 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczosCoeff[i] / (s + static_cast<double>(i));
  return std::sqrt(2.0 * kPi) * std::pow(t, s + 0.5) * std::exp(-t) * a;
}

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

}  // namespace

cplx gamma(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("gamma: non-finite argument");
  if (is_nonpositive_integer(s)) throw PoleError("gamma: pole at non-positive integer");
  if (s.real() < 0.5) {
    return kPi / (std::sin(kPi * s) * gamma_lanczos(1.0 - s));
  }
  return gamma_lanczos(s);
}

// ---------------------------------------------------------------------------
// Incomplete gamma

namespace {

// Legendre continued fraction for e^{c} c^{a} ... returns int_1^inf t^{a-1} e^{-ct} dt
// = e^{-c} / (c + 1 - a - 1(1-a)/(c + 3 - a - ...)) for c >= 1, via modified Lentz.
cplx tail_moment_cf(cplx a, double c) {
  constexpr double tiny = 1e-300;
  cplx b = c + 1.0 - a;
  cplx f = (std::abs(b) < tiny) ? cplx(tiny) : b;
  cplx cc = f;
  cplx d = 0.0;
  for (int i = 1; i < 5000; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = b + an * d;
    if (std::abs(d) < tiny) d = tiny;
    cc = b + an / cc;
    if (std::abs(cc) < tiny) cc = tiny;
    d = 1.0 / d;
    const cplx del = cc * d;
    f *= del;
    if (std::abs(del - 1.0) < 1e-16) return std::exp(-c) / f;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge");
}

// int_x^1 t^{a-1} e^{-t} dt = sum_k (-1)^k / k! (1 - x^{a+k}) / (a+k)
cplx lower_segment(cplx a, double x) {
  const double lx = std::log(x);
  ComplexSum sum;
  double fact = 1.0;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) fact *= k;
    const cplx p = a + static_cast<double>(k);
    cplx term;
    if (std::abs(p) < 1e-6) {
      // (1 - e^{p L}) / p = -L - p L^2 / 2 - p^2 L^3 / 6
      term = -lx - p * lx * lx / 2.0 - p * p * lx * lx * lx / 6.0;
    } else {
      term = (1.0 - std::exp(p * lx)) / p;
    }
    term *= ((k % 2 == 0) ? 1.0 : -1.0) / fact;
    sum.add(term);
    if (k > 3 && std::abs(term) < 1e-17 * std::abs(sum.value())) break;
  }
  return sum.value();
}

}  // namespace

cplx upper_incomplete_gamma(cplx s, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("upper_incomplete_gamma: x must be positive");
  if (x >= 1.0) return std::pow(cplx(x), s) * tail_moment_cf(s, x);
  return tail_moment_cf(s, 1.0) + lower_segment(s, x);
}

cplx tail_moment(cplx a, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("tail_moment: c must be positive");
  if (c >= 1.0) return tail_moment_cf(a, c);
  return std::exp(-a * std::log(c)) * upper_incomplete_gamma(a, c);
}

// ---------------------------------------------------------------------------
// Theta functions and eta

namespace {

cplx nome(const UpperHalfPoint& tau) { return std::exp(kI * kTwoPi * tau.value()); }

}  // namespace

SeriesValue theta1_series(cplx z, const UpperHalfPoint& tau, double tol) {
  const cplx q = nome(tau);
  const double aq = std::abs(q);
  const cplx e = std::exp(kI * kTwoPi * z);
  const cplx ei = 1.0 / e;
  const double emax = std::max({1.0, std::abs(e), std::abs(ei)});
  cplx prod = -2.0 * std::exp(kI * kPi * tau.value() / 4.0) * std::sin(kPi * z);
  cplx qn = 1.0;
  int n = 0;
  while (true) {
    ++n;
    qn *= q;
    prod *= (1.0 - qn) * (1.0 - e * qn) * (1.0 - ei * qn);
    const double next = std::pow(aq, n + 1) * emax;
    if (next < tol / 10.0 || n > 100000) break;
  }
  // |log prod_{k>n}| <= sum 3 * 2 * emax |q|^k for terms below 1/2.
  const double tail = 6.0 * emax * std::pow(aq, n + 1) / (1.0 - aq);
  return {prod, tail, n};
}

cplx theta1(cplx z, const UpperHalfPoint& tau) { return theta1_series(z, tau).value; }

double log_abs_theta1(cplx z, const UpperHalfPoint& tau) {
  const cplx q = nome(tau);
  const double aq = std::abs(q);
  const cplx e = std::exp(kI * kTwoPi * z);
  const cplx ei = 1.0 / e;
  const double emax = std::max({1.0, std::abs(e), std::abs(ei)});
  CompensatedSum sum;
  sum.add(std::log(2.0) - kPi * tau.im() / 4.0 + std::log(std::abs(std::sin(kPi * z))));
  cplx qn = 1.0;
  for (int n = 1; n < 100000; ++n) {
    qn *= q;
    sum.add(std::log(std::abs((1.0 - qn) * (1.0 - e * qn) * (1.0 - ei * qn))));
    if (std::pow(aq, n + 1) * emax < 1e-18) break;
  }
  return sum.value();
}

SeriesValue theta3_series(const UpperHalfPoint& tau, double tol) {
  const cplx t = tau.value();
  cplx sum = 0.0;
  int n = 0;
  double last = 1.0;
  while (true) {
    ++n;
    const cplx term = std::exp(kI * kPi * t * static_cast<double>(n * n));
    sum += term;
    last = std::abs(term);
    const double next = std::exp(-kPi * tau.im() * (n + 1.0) * (n + 1.0));
    if (next < tol / 10.0 || n > 100000) break;
  }
  const double ratio = std::exp(-kPi * tau.im() * (2.0 * n + 3.0));
  const double tail = 2.0 * std::exp(-kPi * tau.im() * (n + 1.0) * (n + 1.0)) / (1.0 - ratio);
  (void)last;
  return {1.0 + 2.0 * sum, tail, n};
}

cplx theta3(const UpperHalfPoint& tau) { return theta3_series(tau).value; }

SeriesValue eta_series(const UpperHalfPoint& tau, double tol) {
  const cplx q = nome(tau);
  const double aq = std::abs(q);
  cplx prod = std::exp(kI * kTwoPi * tau.value() / 24.0);
  cplx qn = 1.0;
  int n = 0;
  while (true) {
    ++n;
    qn *= q;
    prod *= 1.0 - qn;
    if (std::pow(aq, n + 1) < tol / 10.0 || n > 100000) break;
  }
  const double tail = 2.0 * std::pow(aq, n + 1) / (1.0 - aq);
  return {prod, tail, n};
}

cplx eta(const UpperHalfPoint& tau) { return eta_series(tau).value; }

// ---------------------------------------------------------------------------
// c_{alpha,m}

namespace {

// Number of terms for the l-sum: stop once (m/2pi) K_1(2 pi l m)/l is far below tol,
// and bound the remainder geometrically using K_1(x + a) <= e^{-a} K_1(x).
template <class TermFn>
Estimate sum_over_l(double m, double tol, const TermFn& term) {
  const QuadratureSpec kq{};
  const double ratio = std::exp(-kTwoPi * m);
  ComplexSum sum;
  for (int l = 1;; ++l) {
    const double envelope = m / kTwoPi * bessel_k(1.0, kTwoPi * l * m, kq).value.real() / l;
    sum.add(term(l));
    if (envelope < tol * (1.0 - ratio) * 0.1 || l > 50000000) {
      const double bound = envelope * ratio / (1.0 - ratio);
      return {sum.value(), bound};
    }
  }
}

}  // namespace

Estimate c_alpha_m_bessel(double alpha, double m, const QuadratureSpec& quad) {
  if (!(m > 0.0)) throw DomainError("c_alpha_m: m must be positive");
  quad.validate();
  double qerr = 0.0;
  Estimate r = sum_over_l(m, std::max(quad.tol, 1e-16), [&](int l) {
    const Estimate k = bessel_k(1.0, kTwoPi * l * m, quad);
    qerr += m / kTwoPi * k.err / l;
    return cplx(m / kTwoPi * std::cos(kTwoPi * l * alpha) * k.value.real() / l);
  });
  r.err += qerr;
  return r;
}

Estimate c_alpha_m_integral(double alpha, double m, const QuadratureSpec& quad) {
  if (!(m > 0.0)) throw DomainError("c_alpha_m: m must be positive");
  quad.validate();
  boost::math::quadrature::exp_sinh<double> integrator;
  double qerr = 0.0;
  const double pm2 = kPi * kPi * m * m;
  Estimate r = sum_over_l(m, std::max(quad.tol, 1e-16), [&](int l) {
    const double l2 = static_cast<double>(l) * l;
    // Rescale x = (pi m / l) y so the integrand peaks at y = 1.
    const double scale = kPi * m / l;
    const double peak = 2.0 * kPi * m * l;
    auto f = [&](double y) { return std::exp(-l2 * scale * y - pm2 / (scale * y) + peak); };
    double err = 0.0;
    const double v = integrator.integrate(f, 1e-15, &err) * scale * std::exp(-peak);
    qerr += std::abs(err) * scale * std::exp(-peak) / (4.0 * kPi * kPi) + 1e-16 * std::abs(v);
    return cplx(std::cos(kTwoPi * l * alpha) * v / (4.0 * kPi * kPi));
  });
  r.err += qerr;
  return r;
}

double c_alpha_m(double alpha, double m, const QuadratureSpec& quad) {
  const Estimate a = c_alpha_m_bessel(alpha, m, quad);
  const Estimate b = c_alpha_m_integral(alpha, m, quad);
  const double gap = std::abs(a.value - b.value);
  const double allowed = 10.0 * (a.err + b.err) + 1e-14 * std::max(1.0, std::abs(a.value));
  if (gap > allowed) {
    throw AccuracyError("c_alpha_m: representations disagree by " + std::to_string(gap), a.value.real(), 0.0,
                        gap);
  }
  return a.value.real();
}

}  // namespace mdf
