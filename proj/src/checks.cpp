#include "mdf/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <random>

#include "mdf/classical.hpp"
#include "mdf/diffops.hpp"
#include "mdf/error.hpp"
#include "mdf/graphfn.hpp"
#include "mdf/lattice.hpp"
#include "mdf/massive.hpp"
#include "mdf/special_fns.hpp"
#include "mdf/transforms.hpp"

namespace mdf {

bool Measurement::pass() const {
  switch (compare) {
    case Compare::kLess:
      return residual < tolerance;
    case Compare::kLessEqual:
      return residual <= tolerance;
    case Compare::kGreater:
      return residual > tolerance;
    case Compare::kInfo:
      return true;
  }
  return false;
}

bool CheckResult::pass() const {
  if (!error.empty() || measurements.empty()) return false;
  return std::all_of(measurements.begin(), measurements.end(), [](const Measurement& m) { return m.pass(); });
}

const Measurement* CheckResult::worst() const {
  const Measurement* best = nullptr;
  double score = -1.0;
  for (const Measurement& m : measurements) {
    if (m.compare == Measurement::Compare::kInfo) continue;
    double s;
    if (!m.pass()) {
      s = 1e300;
    } else if (m.compare == Measurement::Compare::kGreater) {
      s = m.residual > 0.0 ? m.tolerance / m.residual : 0.0;
    } else {
      s = m.tolerance > 0.0 ? m.residual / m.tolerance : 0.0;
    }
    if (s > score) {
      score = s;
      best = &m;
    }
  }
  return best;
}

namespace {

using Out = std::vector<Measurement>;
using Cmp = Measurement::Compare;

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string tau_str(const UpperHalfPoint& t) { return fmt("tau=%.6g%+.6gi", t.re(), t.im()); }

void add(Out& out, std::string name, std::string inputs, double computed, double residual, double tol,
         Cmp cmp = Cmp::kLess) {
  out.push_back({std::move(name), std::move(inputs), computed, residual, tol, cmp});
}

const UpperHalfPoint kTau(0.2, 1.1);
const UpperHalfPoint kI1(0.0, 1.0);
const TorusPoint kZ{0.3, 0.4};
constexpr double kCatalan = 0.915965594177219015;

// 1. Bessel sum against the twisted partition product.
void representation(const CheckOptions&, Out& out) {
  struct P {
    UpperHalfPoint tau;
    TorusPoint z;
    double mu;
  };
  std::vector<P> pts{{kTau, {0.3, 0.7}, 0.5}};
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-0.5, 0.5), unit(0.0, 1.0), t2(0.8, 1.6), m(0.2, 2.0);
  for (int i = 0; i < 4; ++i) {
    const UpperHalfPoint tau(u(rng), t2(rng));
    const TorusPoint z{unit(rng), unit(rng)};
    pts.push_back({tau, z, m(rng)});
  }
  for (const P& p : pts) {
    const double e = e1_massive(p.z, p.tau, p.mu, 1e-13).value.real();
    const cplx lz = log_partition_z(p.z.alpha, p.z.beta, std::sqrt(p.mu / p.tau.im()), p.tau).value;
    add(out, "e1_vs_minus_log_z",
        tau_str(p.tau) + fmt(" alpha=%.6g beta=%.6g mu=%.6g", p.z.alpha, p.z.beta, p.mu), e,
        std::abs(e + lz), 1e-8);
  }
}

// 2. Modular and elliptic invariance of the massive family.
void invariance(const CheckOptions&, Out& out) {
  for (double s : {1.0, 1.7, 2.5}) {
    for (double mu : {0.25, 1.0}) {
      const std::string in = fmt("s=%.2g mu=%.2g ", s, mu) + tau_str(kTau) + " alpha=0.3 beta=0.4";
      const double tol = 1e-13;
      const cplx base = es_massive(s, kZ, kTau, mu, tol).value;
      const cplx t = es_massive(s, {kZ.alpha, kZ.beta - kZ.alpha}, kTau.translate(1.0), mu, tol).value;
      const cplx inv = es_massive(s, {-kZ.beta, kZ.alpha}, kTau.invert(), mu, tol).value;
      const cplx z1 = es_massive(s, {kZ.alpha, kZ.beta + 1.0}, kTau, mu, tol).value;
      const cplx zt = es_massive(s, {kZ.alpha + 1.0, kZ.beta}, kTau, mu, tol).value;
      add(out, "tau_plus_1", in, base.real(), std::abs(t - base), 1e-8);
      add(out, "tau_inverse", in, base.real(), std::abs(inv - base), 1e-8);
      add(out, "z_plus_1", in, base.real(), std::abs(z1 - base), 1e-8);
      add(out, "z_plus_tau", in, base.real(), std::abs(zt - base), 1e-8);
    }
  }
}

// 3. Partition-function covariance, open-string inversion and the eta limit.
void amplitudes(const CheckOptions&, Out& out) {
  const double a = 0.3, b = 0.7, m = 0.8;
  const std::string in = tau_str(kTau) + " alpha=0.3 beta=0.7 m=0.8";
  const cplx zt = partition_z(a, b, m, kTau.translate(1.0));
  add(out, "z_tau_plus_1", in, zt.real(), std::abs(zt - partition_z(a, b + a, m, kTau)), 1e-9);
  const cplx zs = partition_z(a, b, m, kTau.invert());
  add(out, "z_tau_inverse", in, zs.real(), std::abs(zs - partition_z(b, -a, m / kTau.abs(), kTau)), 1e-9);
  const double f = f_open(0.3, 2.0);
  add(out, "f_inversion", "m=0.3 t=2", f, std::abs(f - f_open(0.6, 0.5)), 1e-9);
  const double t = 1.3;
  const double eta_t = eta(UpperHalfPoint(0.0, t)).real();
  const double d3 = std::abs(f_open(1e-3, t) / std::sqrt(kTwoPi * 1e-3 * t) - eta_t);
  const double d4 = std::abs(f_open(1e-4, t) / std::sqrt(kTwoPi * 1e-4 * t) - eta_t);
  add(out, "eta_limit_error_ratio", "t=1.3 m=1e-3,1e-4", d4, d3 / d4, 3.0, Cmp::kGreater);
}

// 4. Casimir annihilation, per term and summed.
void casimir(const CheckOptions&, Out& out) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.5, 0.5), pos(0.6, 1.6), m(0.1, 2.0);
  std::uniform_int_distribution<int> lat(-4, 4);
  const RadialProfile h = RadialProfile::bessel(1.0);
  const FamilyParams fp = es_family_params(1.0);
  double worst_classical = 0.0, worst_massive = 0.0;
  for (int i = 0; i < 50; ++i) {
    const SeriesPoint p{UpperHalfPoint(u(rng), pos(rng)), {u(rng), u(rng)}, m(rng)};
    int r = lat(rng), l = lat(rng);
    if (r == 0 && l == 0) r = 1;
    const CasimirParts a = casimir_parts(eisenstein_term_jet(1.0, p, r, l), p);
    worst_classical = std::max(worst_classical, std::abs(a.first + a.second) / std::max(std::abs(a.first), 1e-300));
    const CasimirParts b = casimir_parts(family_term_jet(h, fp, p, r, l), p);
    worst_massive = std::max(worst_massive, std::abs(b.first + b.second) / std::max(std::abs(b.first), 1e-300));
  }
  add(out, "per_term_classical", "50 random terms, s=1", worst_classical, worst_classical, 1e-9);
  add(out, "per_term_massive", "50 random terms, s=1", worst_massive, worst_massive, 1e-9);

  const SeriesPoint p{kTau, kZ, 0.7};
  const std::string in = tau_str(kTau) + " alpha=0.3 beta=0.4 mu=0.7";
  for (const auto& [name, series] : {std::pair<const char*, SeriesPtr>{"summed_e1", make_eisenstein_series(1.0)},
                                     {"summed_e1_massive", make_es_series(1.0)}}) {
    const CasimirParts c = casimir_parts(series->evaluate_jet(p, 1e-13), p);
    const double rel = std::abs(c.first + c.second) / std::max(std::abs(c.first), 1.0);
    add(out, name, in, std::abs(c.first), rel, 1e-6);
  }
}

// 5. Jacobi and Maass residuals with a finite-difference oracle.
void pde(const CheckOptions& opt, Out& out) {
  const SeriesPoint off{kTau, kZ, 0.7};
  const SeriesPoint at0{kTau, {}, 0.7};
  const std::string in = tau_str(kTau) + " alpha=0.3 beta=0.4 mu=0.7";
  for (double s : {1.0, 1.7}) {
    CoefficientTriple jac = jacobi_g_coefficients(RadialProfile::bessel(s), 1);
    if (opt.flip_jacobi_sign) {
      jac = {[f = jac.c0](double m) { return -f(m); }, [f = jac.c1](double m) { return -f(m); },
             [f = jac.c2](double m) { return -f(m); }};
    }
    const CoefficientTriple tri = conjugate_triple(jac, SmoothMap::power(s / 2.0), SmoothMap::power(0.5));
    const SeriesPtr es = make_es_series(s);
    const JacobiResiduals r = residual_jacobi(*es, tri, 0.0, off);
    add(out, fmt("jacobi_laplacian_s%.2g", s), in, r.laplacian.reference, r.laplacian.relative(), 1e-6);
    add(out, fmt("jacobi_casimir_s%.2g", s), in, r.casimir.reference, r.casimir.relative(), 1e-6);
    const PointFunction f = [es](const SeriesPoint& q) { return es->evaluate(q, 1e-13).value; };
    const cplx tw = apply_termwise(*es, OperatorSpec::laplacian_z(), off);
    const cplx fd = apply_fd(f, OperatorSpec::laplacian_z(), off);
    add(out, fmt("fd_laplacian_z_s%.2g", s), in, std::abs(tw), std::abs(fd - tw) / std::max(std::abs(tw), 1.0), 1e-3);
  }
  struct M {
    double b, c;
    SeriesPtr series;
  };
  const std::vector<M> maass{{0.5, -1.0, make_family_series(RadialProfile::bessel(1.3), {1.0, 0.5, -1.0, 0.0, 0})},
                             {1.0, -2.0, make_modular_graph_series()}};
  for (const M& m : maass) {
    const CoefficientTriple g = maass_g_coefficients(m.b, m.c);
    const OperatorResidual r = residual_maass(*m.series, g, at0);
    add(out, fmt("maass_b%.2g_c%.2g", m.b, m.c), tau_str(kTau) + " mu=0.7", r.reference, r.relative(), 1e-6);
    const SeriesPtr s = m.series;
    const OperatorResidual fd =
        residual_maass_fd([s](const SeriesPoint& q) { return s->evaluate(q, 1e-13).value; }, g, at0);
    add(out, fmt("maass_fd_b%.2g_c%.2g", m.b, m.c), tau_str(kTau) + " mu=0.7", fd.reference,
        std::abs(fd.residual - r.residual) / std::max(r.reference, 1.0), 1e-3);
  }
}

// 6. Mellin transform in the mass and its inverse.
void mellin(const CheckOptions&, Out& out) {
  const std::string in = tau_str(kTau) + " alpha=0.3 beta=0.4";
  for (double s : {0.5, 1.5, 2.0}) {
    const Estimate f = mellin_forward(kZ, kTau, s);
    const cplx ref = mdf::gamma(cplx(s)) * std::pow(kPi, -s) * eisenstein_continued(s + 1.0, {}, kZ, kTau).value;
    add(out, fmt("forward_s%.2g", s), in, f.value.real(), std::abs(f.value - ref), 1e-5);
  }
  const double mu = 0.5;
  const double e1 = e1_massive(kZ, kTau, mu, 1e-13).value.real();
  std::vector<double> vals;
  for (double c : {0.7, 1.0, 1.3}) {
    MellinGrid g;
    g.c = c;
    const double v = mellin_inverse(kZ, kTau, mu, g).value.real();
    vals.push_back(v);
    add(out, fmt("inverse_c%.2g", c), in + " mu=0.5", v, std::abs(v - e1), 1e-4);
  }
  add(out, "inverse_c_independence", in + " mu=0.5", vals[0], std::abs(vals[0] - vals[2]), 1e-4);
}

// 7. Small-mass power series.
void power(const CheckOptions&, Out& out) {
  const double mu = 0.05;
  const std::string in = tau_str(kTau) + " alpha=0.3 beta=0.4 mu=0.05";
  const double e1 = e1_massive(kZ, kTau, mu, 1e-14).value.real();
  for (int n : {4, 6, 8, 10}) {
    const SeriesValue p = power_series({}, kZ, kTau, mu, n);
    add(out, fmt("error_over_next_term_N%d", n), in, p.value.real(), std::abs(p.value - e1) / p.tail, 2.0,
        Cmp::kLessEqual);
  }
  const TorusPoint w{0.1, 0.2}, z{0.3, 0.35};
  const std::string inw = tau_str(kTau) + " w=(0.1,0.2) z=(0.3,0.35) mu=0.05 N=12";
  const SeriesValue base = power_series(w, z, kTau, mu, 12);
  const SeriesValue s1 = power_series(w, {z.alpha, z.beta + 1.0}, kTau, mu, 12);
  const SeriesValue st = power_series(w, {z.alpha + 1.0, z.beta}, kTau, mu, 12);
  add(out, "phase_z_plus_1", inw, std::abs(base.value),
      std::abs(s1.value - std::exp(kI * kTwoPi * w.alpha) * base.value), base.tail);
  add(out, "phase_z_plus_tau", inw, std::abs(base.value),
      std::abs(st.value - std::exp(-kI * kTwoPi * w.beta) * base.value), base.tail);
}

// 8. Massive modular graph function.
void graph(const CheckOptions&, Out& out) {
  double quartic = 0.0;
  const int R = 1500;
  for (int r = -R; r <= R; ++r) {
    for (int l = -R; l <= R; ++l) {
      if (r || l) quartic += 1.0 / std::pow(double(r) * r + double(l) * l, 2);
    }
  }
  quartic += (kPi / 2.0 + 1.0) / ((R + 0.5) * (R + 0.5));
  const double target = quartic / (kPi * kPi);
  add(out, "target_vs_two_thirds_catalan", "brute-force sum* (r^2+l^2)^-2, R=1500", target,
      std::abs(target - 2.0 / 3.0 * kCatalan), 1e-8);
  const Estimate lim = modular_graph_massless_limit(kI1, 1e-2, 1e-3);
  add(out, "massless_limit", "tau=i mu=1e-2,1e-3", lim.value.real(), std::abs(lim.value.real() - target), 1e-3);
  const double plain = (10.0 * modular_graph_11(kI1, 1e-3).value.real() - modular_graph_11(kI1, 1e-2).value.real()) / 9.0;
  add(out, "linear_richardson_error", "tau=i mu=1e-2,1e-3", plain, std::abs(plain - target), 0.0, Cmp::kInfo);
  const double collapsed = modular_graph_11(kI1, 0.5).value.real();
  const Estimate q = modular_graph_quadrature(kI1, 0.5, 64);
  add(out, "quadrature_vs_collapsed", "tau=i mu=0.5 n=64", collapsed, std::abs(q.value.real() - collapsed), 1e-5);
  const OperatorResidual e2 = massive_e2_residual(kTau, 0.7);
  add(out, "eigenvalue_relation", tau_str(kTau) + " mu=0.7", e2.reference, e2.relative(), 1e-6);
}

// 9. Kronecker limit formula and the reflection formula.
void kronecker(const CheckOptions&, Out& out) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(-0.5, 0.5), unit(0.05, 0.95), t2(0.8, 1.6);
  for (int i = 0; i < 5; ++i) {
    const UpperHalfPoint tau(u(rng), t2(rng));
    const TorusPoint z{unit(rng), unit(rng)};
    const cplx k = kronecker_limit_e1(z, tau);
    const cplx c = eisenstein_continued(1.0, {}, z, tau).value;
    add(out, "theta_vs_continued", tau_str(tau) + fmt(" alpha=%.6g beta=%.6g", z.alpha, z.beta), k.real(),
        std::abs(k - c), 1e-8);
  }
  const TorusPoint w{0.2, 0.1}, z{0.4, 0.7};
  for (double s : {0.3, 0.5, 1.4}) {
    const cplx l = eisenstein_continued(s, w, z, kTau).value;
    const cplx r = std::exp(kI * kTwoPi * symplectic(w, z)) * eisenstein_continued(1.0 - s, z, w, kTau).value;
    add(out, fmt("reflection_s%.2g", s), tau_str(kTau) + " w=(0.2,0.1) z=(0.4,0.7)", l.real(), std::abs(l - r), 1e-6);
  }
}

// 10. Helmholtz Green's function.
void helmholtz(const CheckOptions&, Out& out) {
  for (double mu : {0.8, 3.0}) {
    const Estimate m = helmholtz_mean(1.1, mu);
    add(out, "mean_value", fmt("tau2=1.1 mu=%.2g", mu), m.value.real(), std::abs(m.value.real() - 1.0 / mu), 1e-10);
  }
  const std::vector<std::pair<TorusPoint, double>> pts{
      {{0.3, 0.4}, 0.8}, {{0.0, 0.5}, 0.8}, {{0.5, 0.0}, 2.0}, {{0.01, 0.02}, 0.3}, {{-0.7, 1.25}, 5.0}};
  for (const auto& [z, mu] : pts) {
    const EvalResult a = helmholtz_green(z, 1.1, mu);
    const EvalResult b = helmholtz_resummed(z, 1.1, mu);
    add(out, "mode_sum_vs_resummed", fmt("tau2=1.1 alpha=%.3g beta=%.3g mu=%.2g", z.alpha, z.beta, mu),
        a.value.real(), std::abs(a.value - b.value), 1e-8);
  }
  const double lit = helmholtz_resummed(kZ, 1.1, 0.8, 1e-12, kTwoPi * 1.1).value.real();
  const double mode = helmholtz_green(kZ, 1.1, 0.8).value.real();
  add(out, "exponent_scale_2pi_tau2_mismatch", "tau2=1.1 alpha=0.3 beta=0.4 mu=0.8", lit, std::abs(lit - mode), 0.0,
      Cmp::kInfo);
  for (double m : {0.7, 1.0}) {
    const IdentityResidual c = coth_identity(m);
    add(out, "coth_sum", fmt("m=%.2g", m), c.lhs, std::abs(c.residual()), 1e-12);
  }
}

// 11. Special functions.
void special(const CheckOptions&, Out& out) {
  double worst = 0.0;
  for (double x = 0.1; x <= 30.0; x *= 1.37) {
    const double exact = std::sqrt(kPi / (2 * x)) * std::exp(-x);
    worst = std::max(worst, std::abs(bessel_k(0.5, x).value - exact));
  }
  add(out, "k_half_closed_form", "x in [0.1, 30]", worst, worst, 1e-12);
  const double xk = 1e-3 * bessel_k(1.0, 1e-3).value.real();
  add(out, "x_k1_near_zero", "x=1e-3", xk, std::abs(xk - 1.0), 1e-3);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double rec = 0.0, refl = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cplx s(u(rng), u(rng) * 0.3);
    const cplx g1 = mdf::gamma(s + 1.0), g = mdf::gamma(s);
    rec = std::max(rec, std::abs(g1 - s * g) / std::max(1.0, std::abs(g1)));
    const cplx pis = kPi / std::sin(kPi * s);
    refl = std::max(refl, std::abs(g * mdf::gamma(1.0 - s) - pis) / std::max(1.0, std::abs(pis)));
  }
  add(out, "gamma_recurrence", "20 random s", rec, rec, 1e-10);
  add(out, "gamma_reflection", "20 random s", refl, refl, 1e-10);

  for (auto [a, m] : {std::pair{0.0, 1.0}, {0.3, 0.4}, {0.5, 0.2}}) {
    const Estimate b = c_alpha_m_bessel(a, m);
    const Estimate q = c_alpha_m_integral(a, m);
    add(out, "c_alpha_m_dual", fmt("alpha=%.2g m=%.2g", a, m), b.value.real(), std::abs(b.value - q.value), 1e-10);
  }
  const double c0 = c_alpha_m_bessel(0.0, 1e-3).value.real();
  add(out, "c_alpha_m_limit_0", "alpha=0 m=1e-3", c0, std::abs(c0 - 1.0 / 24.0), 1e-3);
  const double ch = c_alpha_m_bessel(0.5, 1e-3).value.real();
  add(out, "c_alpha_m_limit_half", "alpha=0.5 m=1e-3", ch, std::abs(ch + 1.0 / 48.0), 1e-3);
}

// 12. Bit-identical results for 1, 4 and 8 worker threads.
void determinism(const CheckOptions&, Out& out) {
  auto evaluate = [] {
    std::vector<cplx> v;
    v.push_back(e1_massive(kZ, kTau, 1e-3, 1e-12).value);
    v.push_back(es_massive(1.7, {0.1, 0.9}, kI1, 0.25, 1e-12).value);
    v.push_back(eisenstein_direct(2.5, {}, kZ, kTau, 1e-9).value);
    v.push_back(eisenstein_continued(0.3, {0.2, 0.1}, {0.4, 0.7}, kTau).value);
    v.push_back(modular_graph_11(kTau, 1e-3).value);
    v.push_back(e1_massive_twisted({0.1, 0.2}, kZ, kTau, 0.05, 1e-12).value);
    v.push_back(power_series({}, kZ, kTau, 0.05, 8).value);
    v.push_back(w_generating(kTau, 0.5).value);
    return v;
  };
  const int saved = thread_count();
  std::vector<std::vector<cplx>> runs;
  try {
    for (int t : {1, 4, 8}) {
      set_thread_count(t);
      runs.push_back(evaluate());
    }
  } catch (...) {
    set_thread_count(saved);
    throw;
  }
  set_thread_count(saved);
  const char* names[] = {"threads_4", "threads_8"};
  for (int k = 1; k <= 2; ++k) {
    int differing = 0;
    for (std::size_t i = 0; i < runs[0].size(); ++i) {
      if (std::memcmp(&runs[0][i], &runs[k][i], sizeof(cplx)) != 0) ++differing;
    }
    add(out, names[k - 1], fmt("%zu evaluations against 1 thread", runs[0].size()), runs[k][0].real(), differing,
        1.0);
  }
}

}  // namespace

const std::vector<CheckInfo>& acceptance_checks() {
  static const std::vector<CheckInfo> checks{
      {"c01_partition_representation", "amplitudes", "Bessel sum equals minus the log of the partition product",
       representation},
      {"c02_modular_elliptic_invariance", "invariance", "massive family under tau+1, -1/tau, z+1, z+tau", invariance},
      {"c03_partition_covariance", "amplitudes", "Z covariance, F inversion and the eta limit", amplitudes},
      {"c04_casimir", "pde", "Casimir annihilation per term and summed", casimir},
      {"c05_pde_residuals", "pde", "Jacobi and Maass residuals with finite-difference oracle", pde},
      {"c06_mellin", "transforms", "Mellin transform in the mass and its inverse", mellin},
      {"c07_power_series", "transforms", "small-mass power series and its phases", power},
      {"c08_graph_function", "graph", "massive modular graph function", graph},
      {"c09_kronecker_reflection", "invariance", "Kronecker limit formula and reflection", kronecker},
      {"c10_helmholtz", "graph", "Helmholtz Green's function and the coth sum", helmholtz},
      {"c11_special_functions", "amplitudes", "Bessel, gamma and c_{alpha,m}", special},
      {"c12_determinism", "invariance", "bit-identical results across thread counts", determinism},
  };
  return checks;
}

const std::vector<std::string>& suite_selectors() {
  static const std::vector<std::string> s{"all", "invariance", "pde", "transforms", "graph", "amplitudes"};
  return s;
}

bool is_suite_selector(const std::string& s) {
  const auto& v = suite_selectors();
  return std::find(v.begin(), v.end(), s) != v.end();
}

CheckResult run_check(const CheckInfo& info, const CheckOptions& opt) {
  CheckResult r{info.id, info.suite, info.title, {}, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    info.body(opt, r.measurements);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_suite(const std::string& selector, const CheckOptions& opt,
                                   const std::function<void(const CheckResult&)>& on_done) {
  if (!is_suite_selector(selector)) throw DomainError("unknown suite: " + selector);
  std::vector<CheckResult> out;
  for (const CheckInfo& c : acceptance_checks()) {
    if (selector != "all" && selector != c.suite) continue;
    out.push_back(run_check(c, opt));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace mdf
