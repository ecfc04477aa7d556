#include "mdf/massive.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "mdf/classical.hpp"
#include "mdf/error.hpp"
#include "mdf/kernels.hpp"
#include "mdf/lattice.hpp"

namespace mdf {
namespace {

// Stand-in for "no bound available here"; large but safely below overflow after shell weighting.
constexpr double kNoBound = 1e250;
constexpr int kJetMarginShells = 3;

double wrap_unit(double x) { return x - std::floor(x + 0.5); }

// |log(1 - x)| <= |x| / (1 - |x|)
double log1m_bound(double ax) { return ax / (1.0 - ax); }

}  // namespace

// ---------------------------------------------------------------------------
// Products

SeriesValue log_partition_z(double alpha, double beta, double m, const UpperHalfPoint& tau, double tol) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("partition_z: m must be positive");
  if (!(tol > 0.0)) throw DomainError("partition_z: tolerance must be positive");
  const double a = wrap_unit(alpha);
  const double b = wrap_unit(beta);
  const double t1 = tau.re(), t2 = tau.im();
  auto log_factor = [&](double shift, double sign) {
    const cplx x = std::exp(-kTwoPi * t2 * std::sqrt(m * m + shift * shift) + kI * kTwoPi * (shift * t1 + sign * b));
    return std::log(1.0 - x);
  };
  ComplexSum sum;
  sum.add(cplx(-8.0 * kPi * c_alpha_m(a, m) * t2, 0.0));
  SeriesValue out;
  // |n +- a| >= |n| - 1/2, so factors with |n| > N are below q^(N + 1/2) with q = e^{-2 pi t2}.
  const double q = std::exp(-kTwoPi * t2);
  for (int n = 0;; ++n) {
    for (int sn : {1, -1}) {
      if (n == 0 && sn == -1) continue;
      const double nn = sn * n;
      sum.add(log_factor(nn + a, 1.0));
      sum.add(log_factor(nn - a, -1.0));
      out.terms += 2;
    }
    const double next = std::pow(q, n + 0.5);
    // Four factors per |n|, geometric in n.
    const double tail = 4.0 * log1m_bound(next) / (1.0 - q);
    if (tail < tol) {
      out.tail = tail;
      break;
    }
    if (n > 1000000) throw ConvergenceError("partition_z: product does not converge");
  }
  out.value = sum.value();
  return out;
}

cplx partition_z(double alpha, double beta, double m, const UpperHalfPoint& tau, double tol) {
  return std::exp(log_partition_z(alpha, beta, m, tau, tol).value);
}

SeriesValue log_f_open(double m, double t, double tol) {
  if (!(m > 0.0) || !(t > 0.0)) throw DomainError("f_open: m and t must be positive");
  const double q = std::exp(-kTwoPi * t);
  CompensatedSum sum;
  sum.add(-kTwoPi * c_alpha_m(0.0, m) * t);
  sum.add(0.5 * std::log1p(-std::exp(-kTwoPi * m * t)));
  SeriesValue out;
  for (int n = 1;; ++n) {
    sum.add(std::log1p(-std::exp(-kTwoPi * t * std::hypot(m, double(n)))));
    ++out.terms;
    const double next = std::pow(q, n + 1);
    const double tail = log1m_bound(next) / (1.0 - q);
    if (tail < tol) {
      out.tail = tail;
      break;
    }
    if (n > 10000000) throw ConvergenceError("f_open: product does not converge");
  }
  out.value = sum.value();
  return out;
}

double f_open(double m, double t, double tol) { return std::exp(log_f_open(m, t, tol).value.real()); }

namespace {

// theta_3(i s) - 1 for s > 0, using theta_3(i s) = s^{-1/2} theta_3(i / s) for small s.
double theta3_minus_one(double s) {
  auto series = [](double u) {
    double acc = 0.0;
    for (int n = 1;; ++n) {
      const double t = std::exp(-kPi * n * n * u);
      acc += t;
      if (t < 1e-18 * std::max(acc, 1e-300)) break;
    }
    return 2.0 * acc;
  };
  if (s >= 1.0) return series(s);
  return (1.0 + series(1.0 / s)) / std::sqrt(s) - 1.0;
}

}  // namespace

Estimate log_f_open_integral(double m, double t2) {
  if (!(m > 0.0) || !(t2 > 0.0)) throw DomainError("log_f_open_integral: m and t2 must be positive");
  auto integrand = [=](double s) {
    if (!(s > 0.0)) return 0.0;
    return std::exp(-kPi * t2 * m * m / s) * theta3_minus_one(s * t2) * theta3_minus_one(s / t2);
  };
  boost::math::quadrature::exp_sinh<double> quad;
  double err_hi = 0.0, err_lo = 0.0;
  const double hi = quad.integrate(integrand, 1.0, std::numeric_limits<double>::infinity(), 1e-14, &err_hi);
  // int_0^1 f(s) ds = int_1^inf f(1/u) / u^2 du
  const double lo = quad.integrate([&](double u) { return integrand(1.0 / u) / (u * u); }, 1.0,
                                   std::numeric_limits<double>::infinity(), 1e-14, &err_lo);
  const double integral = hi + lo;
  const double value = -kTwoPi * t2 * c_alpha_m(0.0, m) - (kTwoPi / t2) * c_alpha_m(0.0, m * t2) - 0.25 * integral;
  return {value, 0.25 * (err_hi + err_lo) * std::max(1.0, std::abs(integral)) + 1e-14 * std::abs(value)};
}

// ---------------------------------------------------------------------------
// Radial profiles

RadialProfile RadialProfile::bessel(cplx s) {
  RadialProfile p;
  p.eval = [s](double x, int order) {
    std::array<cplx, 4> d = bessel_k_derivatives(s, kTwoPi * x, order);
    double scale = 2.0;
    for (int k = 0; k < 4; ++k) {
      d[k] *= scale;
      scale *= kTwoPi;
    }
    return d;
  };
  // |K_s| <= K_{Re s}, and -K'_v / K_v >= 1 for real v (log-convexity in the order).
  const double v = s.real();
  p.bound = [v](double x) { return x > 0.0 ? 2.0 * bessel_k(v, kTwoPi * x).value.real() : kNoBound; };
  p.rate = kTwoPi;
  if (s.imag() == 0.0) p.ode = ProfileOde{1.0, -v * v, 4.0 * kPi * kPi, 0.5};
  return p;
}

RadialProfile RadialProfile::graph_kernel() {
  RadialProfile p;
  p.eval = [](double x, int order) {
    const std::array<cplx, 4> k = bessel_k_derivatives(1.0, kTwoPi * x, order);
    std::array<cplx, 4> d{};
    const double c = kTwoPi;
    d[0] = 4.0 * k[0] * k[0];
    if (order >= 1) d[1] = 8.0 * c * k[0] * k[1];
    if (order >= 2) d[2] = 8.0 * c * c * (k[1] * k[1] + k[0] * k[2]);
    if (order >= 3) d[3] = 8.0 * c * c * c * (3.0 * k[1] * k[2] + k[0] * k[3]);
    return d;
  };
  p.bound = [](double x) {
    if (!(x > 0.0)) return kNoBound;
    const double k = bessel_k(1.0, kTwoPi * x).value.real();
    return 4.0 * k * k;
  };
  p.rate = 2.0 * kTwoPi;
  return p;
}

RadialProfile RadialProfile::from_function(std::function<std::array<cplx, 4>(double, int)> eval, double rate,
                                           double amplitude, std::optional<ProfileOde> ode, double x_min) {
  if (!(rate > 0.0) || !(amplitude > 0.0)) throw DomainError("RadialProfile: decay certificate must be positive");
  RadialProfile p;
  p.eval = std::move(eval);
  p.rate = rate;
  p.bound = [=](double x) { return x >= x_min ? amplitude * std::exp(-rate * x) : kNoBound; };
  p.ode = ode;
  p.validate();
  return p;
}

cplx RadialProfile::ode_residual(double x) const {
  if (!ode) return 0.0;
  const auto d = eval(x, 2);
  return x * x * d[2] + ode->gamma * x * d[1] + (ode->kappa - ode->nu * std::pow(x, 1.0 / ode->a)) * d[0];
}

void RadialProfile::validate() const {
  if (!eval || !bound) throw DomainError("RadialProfile: missing decay certificate");
  if (!(rate >= 0.0) || !std::isfinite(rate)) throw DomainError("RadialProfile: invalid decay rate");
  if (ode && !(ode->a != 0.0)) throw DomainError("RadialProfile: ODE exponent must be nonzero");
  // Ten geometric sample points reaching well into the decaying regime.
  const double x_hi = rate > 0.0 ? std::max(2.0, 20.0 / rate) : 20.0;
  const double x_lo = 0.05;
  double prev_x = 0.0, prev_b = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double x = x_lo * std::pow(x_hi / x_lo, i / 9.0);
    const auto d = eval(x, ode ? 2 : 0);
    const double bx = bound(x);
    if (!std::isfinite(std::abs(d[0]))) throw DomainError("RadialProfile: profile is not finite");
    if (bx < kNoBound && std::abs(d[0]) > bx * (1.0 + 1e-8) + 1e-300) {
      throw DomainError("RadialProfile: decay certificate violated");
    }
    if (i > 0 && prev_b < kNoBound) {
      if (bx > prev_b * (1.0 + 1e-10)) throw DomainError("RadialProfile: bound is not nonincreasing");
      if (rate > 0.0 && bx > prev_b * std::exp(-rate * (x - prev_x)) * (1.0 + 1e-8) + 1e-300) {
        throw DomainError("RadialProfile: declared decay rate violated");
      }
    }
    if (ode) {
      const double xp = std::pow(x, 1.0 / ode->a);
      const double scale = std::abs(x * x * d[2]) + std::abs(ode->gamma * x * d[1]) +
                           (std::abs(ode->kappa) + std::abs(ode->nu) * xp) * std::abs(d[0]);
      if (std::abs(ode_residual(x)) > 1e-7 * scale + 1e-300) {
        throw DomainError("RadialProfile: declared ODE does not hold");
      }
    }
    prev_x = x;
    prev_b = bx;
  }
  if (bound(1e3) > 1e-3 * std::max(bound(x_lo), 1e-300) && bound(x_lo) < kNoBound) {
    throw DomainError("RadialProfile: bound does not decay");
  }
}

void FamilyParams::validate() const {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("FamilyParams: b must be positive");
  if (!std::isfinite(a)) throw DomainError("FamilyParams: a must be finite");
}

FamilyParams es_family_params(cplx s) { return FamilyParams{0.5, 0.5, -s / 2.0, s / 2.0, 1}; }

// ---------------------------------------------------------------------------
// Generalized family

namespace {

template <class T>
T family_term(const RadialProfile& h, const FamilyParams& p, const Coords<T>& c, double r, double l) {
  const T q = lattice_norm_ratio(c, r, l);
  const T qb = p.b == 1.0 ? q : pow_any(q, p.b);
  const T x = p.a == 0.0 ? qb : (p.a == 1.0 ? c.mu * qb : pow_any(c.mu, p.a) * qb);
  T out = lift(x, [&h](cplx x0, int order) { return h.eval(x0.real(), order); });
  if (p.c != 0.0) out = out * pow_any(q, p.c);
  if (p.d != 0.0) out = out * pow_any(c.mu, p.d);
  if (p.L != 0) out = out * exp_i(lattice_phase_angle(c, r, l) * static_cast<double>(p.L));
  return out;
}

// Jet coordinates in the full z, with z replaced by its representative z - m tau - n in the
// fundamental cell; tau-derivatives are then taken at fixed z.
Coords<Jet> reduced_jet_coords(const SeriesPoint& p) {
  const double m = std::floor(p.z.alpha + 0.5), n = std::floor(p.z.beta + 0.5);
  Coords<Jet> c = make_jet_coords(p.tau, p.z.on(p.tau), p.mu);
  c.z1 = c.z1 - c.tau1 * m - n;
  c.z2 = c.z2 - c.tau2 * m;
  return c;
}

// Bound on |term| over all lattice points with |lambda| >= x.
std::function<double(double)> family_majorant(const RadialProfile& h, const FamilyParams& p, double tau2, double mu) {
  const double mu_d = std::pow(mu, p.d.real());
  const double mu_a = std::pow(mu, p.a);
  const double c = p.c.real();
  if (c > 0.0 && !(h.rate > 0.0)) throw DomainError("e_general: growing weight needs a profile decay rate");
  return [=, &h](double x) {
    if (!(x > 0.0)) return kNoBound;
    const double q0 = x * x / tau2;
    const double u0 = std::pow(q0, p.b);
    const double bx = h.bound(mu_a * u0);
    if (bx >= kNoBound) return kNoBound;
    double weight = std::pow(q0, c);
    if (c > 0.0) {
      // sup over u >= u0 of u^{c/b} e^{-k (u - u0)}
      const double k = h.rate * mu_a;
      const double ustar = c / (p.b * k);
      if (u0 < ustar) weight = std::pow(ustar, c / p.b) * std::exp(-k * (ustar - u0));
    }
    return mu_d * weight * bx;
  };
}

}  // namespace

EvalResult e_general(const RadialProfile& profile, const FamilyParams& params, const TorusPoint& z,
                     const UpperHalfPoint& tau, double mu, double tol) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("e_general: mu must be positive");
  if (!(tol > 0.0)) throw DomainError("e_general: tolerance must be positive");
  profile.validate();
  params.validate();
  const TruncationPlan plan = plan_truncation_majorant(family_majorant(profile, params, tau.im(), mu), tau, tol);
  const Coords<cplx> c = make_coords(tau, z.reduced().on(tau), mu);
  const auto sum = sum_shells<cplx>(1, plan.radius,
                                    [&](int r, int l) { return family_term(profile, params, c, r, l); });
  EvalResult res;
  res.value = sum.value;
  res.radius = plan.radius;
  res.terms = static_cast<int>(sum.terms);
  res.err_bound = plan.certificate.bound + 1e-15 * std::max(1.0, std::abs(sum.value)) * std::sqrt(double(sum.terms));
  return res;
}

EvalResult es_massive(cplx s, const TorusPoint& z, const UpperHalfPoint& tau, double mu, double tol) {
  return e_general(RadialProfile::bessel(s), es_family_params(s), z, tau, mu, tol);
}

EvalResult e1_massive(const TorusPoint& z, const UpperHalfPoint& tau, double mu, double tol) {
  return es_massive(1.0, z, tau, mu, tol);
}

EvalResult e1_massive_twisted(const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau, double mu,
                              double tol) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("e1_massive_twisted: mu must be positive");
  if (!(tol > 0.0)) throw DomainError("e1_massive_twisted: tolerance must be positive");
  // The sum runs over the coset w + Lambda, so w may be reduced freely.
  const TorusPoint wr = w.reduced();
  const double t2 = tau.im();
  const double k = kTwoPi * std::sqrt(mu / t2);
  const double pre = 2.0 * std::sqrt(mu * t2);
  const double shift = std::abs(wr.on(tau));
  auto majorant = [=](double x) {
    const double y = x - shift;
    if (y <= 0.0) return kNoBound;
    return pre * bessel_k(1.0, k * y).value.real() / y;
  };
  const TruncationPlan plan = plan_truncation_majorant(majorant, tau, tol);
  const double eps = 1e-13;
  auto term = [&](int r, int l) {
    const TorusPoint v{wr.alpha + r, wr.beta + l};
    const double len = std::abs(v.on(tau));
    return pre * bessel_k(1.0, k * len).value / len * std::exp(kI * kTwoPi * symplectic(v, z));
  };
  auto include = [&](int r, int l) {
    return !(std::abs(wr.alpha + r) < eps && std::abs(wr.beta + l) < eps);
  };
  const auto sum = sum_shells<cplx>(0, plan.radius, term, include);
  EvalResult res;
  res.value = sum.value;
  res.radius = plan.radius;
  res.terms = static_cast<int>(sum.terms);
  res.err_bound = plan.certificate.bound + 1e-15 * std::max(1.0, std::abs(sum.value)) * std::sqrt(double(sum.terms));
  return res;
}

// ---------------------------------------------------------------------------
// Coefficient triples

CoefficientTriple CoefficientTriple::zero() {
  auto z = [](double) { return cplx(0.0); };
  return {z, z, z};
}

CoefficientTriple jacobi_g_coefficients(const RadialProfile& profile, int L) {
  profile.validate();
  if (!profile.ode) throw DomainError("jacobi_g_coefficients: profile carries no ODE data");
  const ProfileOde o = *profile.ode;
  if (o.nu == 0.0) throw DomainError("jacobi_g_coefficients: degenerate ODE (nu = 0)");
  const double s = double(L) * L * 2.0 * kPi * kPi / o.nu;
  const double e = 1.0 / o.a;
  return {[=](double mu) { return cplx(s * o.kappa * std::pow(mu, -e)); },
          [=](double mu) { return cplx(s * o.gamma * std::pow(mu, 1.0 - e)); },
          [=](double mu) { return cplx(s * std::pow(mu, 2.0 - e)); }};
}

CoefficientTriple maass_g_coefficients(double b, double c) {
  if (!(b > 0.0)) throw DomainError("maass_g_coefficients: b must be positive");
  return {[=](double) { return cplx(-c * c - c); }, [=](double mu) { return cplx(-(b * b + 2.0 * b * c + b) * mu); },
          [=](double mu) { return cplx(-b * b * mu * mu); }};
}

SmoothMap SmoothMap::identity() { return power(1.0); }

SmoothMap SmoothMap::constant(double v) {
  return {[v](double) { return std::array<double, 4>{v, 0.0, 0.0, 0.0}; }};
}

SmoothMap SmoothMap::power(double p, double scale) {
  return {[p, scale](double mu) {
    std::array<double, 4> d{};
    double coef = scale;
    for (int k = 0; k < 4; ++k) {
      d[k] = coef == 0.0 ? 0.0 : coef * std::pow(mu, p - k);
      coef *= (p - k);
    }
    return d;
  }};
}

SmoothMap SmoothMap::affine(double a, double b) {
  return {[a, b](double mu) { return std::array<double, 4>{a + b * mu, b, 0.0, 0.0}; }};
}

CoefficientTriple conjugate_triple(const CoefficientTriple& base, const SmoothMap& g, const SmoothMap& phi) {
  auto parts = [=](double mu) {
    const auto gd = g.eval(mu);
    const auto pd = phi.eval(mu);
    const double nu = pd[0];
    struct P {
      cplx b0, b1, b2;
      double g, g1, g2, p1, p2;
    };
    return P{base.c0(nu), base.c1(nu), base.c2(nu), gd[0], gd[1], gd[2], pd[1], pd[2]};
  };
  return {[=](double mu) {
            const auto p = parts(mu);
            const double lg1 = p.g1 / p.g;
            return p.b2 * ((2.0 * lg1 * lg1 - p.g2 / p.g) / (p.p1 * p.p1) + p.p2 * lg1 / (p.p1 * p.p1 * p.p1)) -
                   p.b1 * lg1 / p.p1 + p.b0;
          },
          [=](double mu) {
            const auto p = parts(mu);
            const double lg1 = p.g1 / p.g;
            return p.b2 * (-2.0 * lg1 / (p.p1 * p.p1) - p.p2 / (p.p1 * p.p1 * p.p1)) + p.b1 / p.p1;
          },
          [=](double mu) {
            const auto p = parts(mu);
            return p.b2 / (p.p1 * p.p1);
          }};
}

// ---------------------------------------------------------------------------
// Series objects

namespace {

class FamilySeries final : public LatticeSeries {
 public:
  FamilySeries(RadialProfile h, FamilyParams p) : h_(std::move(h)), p_(p) {
    h_.validate();
    p_.validate();
  }

  EvalResult evaluate(const SeriesPoint& pt, double tol) const override {
    return e_general(h_, p_, pt.z, pt.tau, pt.mu, tol);
  }

  Jet evaluate_jet(const SeriesPoint& pt, double tol) const override {
    if (!(pt.mu > 0.0)) throw DomainError("e_general: mu must be positive");
    const TruncationPlan plan = plan_truncation_majorant(family_majorant(h_, p_, pt.tau.im(), pt.mu), pt.tau, tol);
    const Coords<Jet> c = reduced_jet_coords(pt);
    return sum_shells<Jet>(1, plan.radius + kJetMarginShells,
                           [&](int r, int l) { return family_term(h_, p_, c, r, l); })
        .value;
  }

 private:
  RadialProfile h_;
  FamilyParams p_;
};

// f(tau, z, phi(mu)) from the jet of f at phi(mu): every mu-increment is replaced by the
// Taylor expansion of phi around mu.
Jet substitute_mu(const Jet& f, const std::array<double, 4>& phi) {
  std::array<Jet, Jet::kVars> inc;
  for (int v = 0; v < Jet::kVars; ++v) inc[v] = Jet::variable(static_cast<Jet::Var>(v), 0.0);
  const Jet dmu = inc[Jet::kMu];
  inc[Jet::kMu] = dmu * phi[1] + dmu * dmu * (phi[2] / 2.0) + dmu * dmu * dmu * (phi[3] / 6.0);
  Jet out;
  for (int i = 0; i < Jet::kSize; ++i) {
    if (f.coeff(i) == cplx(0.0)) continue;
    const auto& k = Jet::multi_index(i);
    Jet mono(f.coeff(i));
    for (int v = 0; v < Jet::kVars; ++v) {
      for (int e = 0; e < k[v]; ++e) mono = mono * inc[v];
    }
    out += mono;
  }
  return out;
}

class EquivalentSeries final : public LatticeSeries {
 public:
  EquivalentSeries(SeriesPtr base, SmoothMap g, SmoothMap phi)
      : base_(std::move(base)), g_(std::move(g)), phi_(std::move(phi)) {}

  EvalResult evaluate(const SeriesPoint& pt, double tol) const override {
    const auto gd = g_.eval(pt.mu);
    SeriesPoint q = pt;
    q.mu = phi_.eval(pt.mu)[0];
    const double ag = std::abs(gd[0]);
    EvalResult r = base_->evaluate(q, tol / std::max(ag, 1e-300));
    r.value *= gd[0];
    r.err_bound *= ag;
    return r;
  }

  Jet evaluate_jet(const SeriesPoint& pt, double tol) const override {
    const auto gd = g_.eval(pt.mu);
    const auto pd = phi_.eval(pt.mu);
    SeriesPoint q = pt;
    q.mu = pd[0];
    const Jet f = substitute_mu(base_->evaluate_jet(q, tol / std::max(std::abs(gd[0]), 1e-300)), pd);
    const Jet g = Jet::compose(Jet::variable(Jet::kMu, pt.mu), {gd[0], gd[1], gd[2], gd[3]});
    return g * f;
  }

 private:
  SeriesPtr base_;
  SmoothMap g_, phi_;
};

void validate_maps(const SmoothMap& g, const SmoothMap& phi) {
  if (!g.eval || !phi.eval) throw DomainError("equivalence_transform: missing map");
  int sign = 0;
  for (int i = 0; i <= 24; ++i) {
    const double mu = std::pow(10.0, -6.0 + 0.5 * i);
    const auto gd = g.eval(mu);
    const auto pd = phi.eval(mu);
    if (!(std::abs(gd[0]) > 0.0) || !std::isfinite(gd[0])) throw DomainError("equivalence_transform: g vanishes");
    if (!(pd[0] > 0.0)) throw DomainError("equivalence_transform: phi leaves the positive reals");
    const int s = pd[1] > 0.0 ? 1 : (pd[1] < 0.0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) throw DomainError("equivalence_transform: phi' vanishes");
    sign = s;
  }
  // Onto (0, inf): phi must approach both ends of the half line.
  const double mid = phi.eval(1.0)[0];
  const double lo = phi.eval(1e-12)[0], hi = phi.eval(1e12)[0];
  const double small = std::min(lo, hi), large = std::max(lo, hi);
  if (!(small < 1e-3 * mid) || !(large > 1e3 * mid)) {
    throw DomainError("equivalence_transform: phi is not onto the positive reals");
  }
}

}  // namespace

Jet family_term_jet(const RadialProfile& profile, const FamilyParams& params, const SeriesPoint& p, int r, int l) {
  const Coords<Jet> c = reduced_jet_coords(p);
  return family_term(profile, params, c, r, l);
}

SeriesPtr make_family_series(const RadialProfile& profile, const FamilyParams& params) {
  return std::make_shared<FamilySeries>(profile, params);
}

SeriesPtr make_es_series(cplx s) { return make_family_series(RadialProfile::bessel(s), es_family_params(s)); }

SeriesPtr equivalence_transform(SeriesPtr base, const SmoothMap& g, const SmoothMap& phi) {
  if (!base) throw DomainError("equivalence_transform: missing base series");
  validate_maps(g, phi);
  return std::make_shared<EquivalentSeries>(std::move(base), g, phi);
}

}  // namespace mdf
