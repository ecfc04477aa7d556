#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mdf/classical.hpp"
#include "mdf/error.hpp"
#include "mdf/graphfn.hpp"
#include "mdf/special_fns.hpp"

#include <cmath>
#include <vector>

using namespace mdf;

namespace {
const UpperHalfPoint kI1(0.0, 1.0);
const UpperHalfPoint kTau(0.2, 1.1);

// sum* (r^2 + l^2)^-2 over the square |r|, |l| <= R plus the continuum tail outside it.
double square_lattice_quartic(int R) {
  double acc = 0.0;
  for (int r = -R; r <= R; ++r) {
    for (int l = -R; l <= R; ++l) {
      if (r || l) acc += 1.0 / std::pow(double(r) * r + double(l) * l, 2);
    }
  }
  const double a = R + 0.5;
  return acc + (kPi / 2.0 + 1.0) / (a * a);
}
}  // namespace

TEST_CASE("massless limit of the graph function") {
  // E_2(0, 0; i) = sum* |lambda|^-4 / pi^2 = 4 zeta(2) beta(2) / pi^2 = (2/3) Catalan.
  const double brute = square_lattice_quartic(1500) / (kPi * kPi);
  const double target = 2.0 / 3.0 * 0.915965594177219015;
  CHECK(std::abs(brute - target) < 1e-8);

  const Estimate lim = modular_graph_massless_limit(kI1);
  CHECK(std::abs(lim.value.real() - target) < 1e-3);
  CHECK(lim.err < 1e-3);

  // A linear fit in mu cannot see the mu log^2 mu approach.
  const double hi = modular_graph_11(kI1, 1e-2).value.real();
  const double lo = modular_graph_11(kI1, 1e-3).value.real();
  CHECK(std::abs((10.0 * lo - hi) / 9.0 - target) > 1e-2);
}

TEST_CASE("small-mass expansion") {
  const GraphSmallMass sm = modular_graph_small_mass(kTau);
  const double t2 = kTau.im();
  const double kronecker = kTwoPi * (0.5772156649015329 - std::log(2.0) - std::log(std::sqrt(t2) * std::norm(eta(kTau))));
  CHECK(std::abs(sm.k0 - kronecker) < 1e-12);
  // Derivative of 4 zeta(s) beta(s) - pi / (s - 1) at s = 1 for the square lattice.
  CHECK(std::abs(modular_graph_small_mass(kI1).k1 - 0.365856923719020705) < 1e-12);

  EisensteinOptions opt;
  opt.allow_lattice_points = true;
  const double e2 = eisenstein_continued(2.0, {}, {}, kTau, 1e-14, opt).value.real();
  for (double mu : {1e-4, 1e-5}) {
    const double gap = e2 - modular_graph_11(kTau, mu).value.real();
    const double lmu = std::log(mu);
    CHECK(std::abs(gap - sm.deficit(mu)) < 12.0 * mu * mu * lmu * lmu);
  }
}

TEST_CASE("graph function as a torus integral") {
  const double collapsed = modular_graph_11(kI1, 0.5).value.real();
  const Estimate quad = modular_graph_quadrature(kI1, 0.5, 64);
  CHECK(std::abs(quad.value.real() - collapsed) < 1e-5);
  CHECK(std::abs(quad.value.imag()) < 1e-12);
}

TEST_CASE("graph function symmetries and monotonicity") {
  for (double mu : {0.3, 1.0}) {
    const double g = modular_graph_11(kTau, mu).value.real();
    CHECK(std::abs(modular_graph_11(kTau.translate(1.0), mu).value.real() - g) < 1e-8);
    CHECK(std::abs(modular_graph_11(kTau.invert(), mu).value.real() - g) < 1e-8);
  }
  double prev = 1e300;
  for (double mu : {0.01, 0.1, 0.5, 1.0, 3.0}) {
    const EvalResult g = modular_graph_11(kTau, mu);
    CHECK(g.value.real() > 0.0);
    CHECK(std::abs(g.value.imag()) == 0.0);
    CHECK(g.value.real() < prev);
    prev = g.value.real();
  }
}

TEST_CASE("eigenvalue relation of the graph function") {
  const OperatorResidual r = massive_e2_residual(kTau, 0.7);
  CHECK(r.relative() < 1e-6);
  const std::vector<std::pair<UpperHalfPoint, double>> grid{
      {kI1, 0.2}, {kTau, 0.7}, {{-0.4, 0.9}, 1.5}, {{0.1, 2.0}, 0.05}, {{0.45, 1.3}, 3.0}};
  for (const auto& [tau, mu] : grid) CHECK(massive_e2_residual(tau, mu).relative() < 1e-6);

  // Written as Delta f = (g2 d^2 + g1 d + g0) f with (g2, g1, g0) = (-mu^2, 2 mu, -2).
  const CoefficientTriple g{[](double) { return cplx(-2.0); }, [](double mu) { return cplx(2.0 * mu); },
                            [](double mu) { return cplx(-mu * mu); }};
  const SeriesPtr series = make_modular_graph_series();
  const OperatorResidual same = residual_maass(*series, g, {kTau, {}, 0.7});
  CHECK(std::abs(same.residual - r.residual) < 1e-14);

  const PointFunction f = [](const SeriesPoint& p) { return modular_graph_11(p.tau, p.mu, 1e-14).value; };
  const OperatorResidual fd = residual_maass_fd(f, g, {kTau, {}, 0.7});
  CHECK(fd.relative() < 1e-3);
}

TEST_CASE("Helmholtz Green's function representations") {
  const std::vector<std::pair<TorusPoint, double>> pts{
      {{0.3, 0.4}, 0.8}, {{0.0, 0.5}, 0.8}, {{0.5, 0.0}, 2.0}, {{0.01, 0.02}, 0.3}, {{-0.7, 1.25}, 5.0}};
  for (const auto& [z, mu] : pts) {
    const EvalResult mode = helmholtz_green(z, 1.1, mu);
    const EvalResult resum = helmholtz_resummed(z, 1.1, mu);
    CHECK(std::abs(mode.value - resum.value) < 1e-8);
    CHECK(mode.err_bound < 1e-11);
    CHECK(resum.err_bound < 1e-11);
  }
  // Exponent e^{-2 pi tau2 sqrt(A) |l - alpha|} does not reproduce the mode sum.
  const double lit = helmholtz_resummed({0.3, 0.4}, 1.1, 0.8, 1e-12, kTwoPi * 1.1).value.real();
  CHECK(std::abs(lit - helmholtz_green({0.3, 0.4}, 1.1, 0.8).value.real()) > 0.1);

  CHECK_THROWS_AS(helmholtz_green({0.3, 0.4}, kTau, 0.8), UnsupportedError);
  CHECK_NOTHROW(helmholtz_green({0.3, 0.4}, UpperHalfPoint(0.0, 1.1), 0.8));
  CHECK_THROWS_AS(helmholtz_green({1.0, 2.0}, 1.1, 0.8), SingularInputError);
  CHECK_THROWS_AS(helmholtz_resummed({0.3, 0.4}, 1.1, -1.0), DomainError);
}

TEST_CASE("Helmholtz mean value") {
  for (double mu : {0.8, 3.0}) {
    const Estimate m = helmholtz_mean(1.1, mu);
    CHECK(std::abs(m.value.real() - 1.0 / mu) < 1e-10);
  }
}

TEST_CASE("Helmholtz massless part is proportional to E_1") {
  // lim (G - 1/mu) at mu -> 0 from two masses, divided by E_1(z; i tau2).
  const double t2 = 1.1, m1 = 1e-4, m2 = 5e-5;
  std::vector<double> ratio;
  for (const TorusPoint& z : {TorusPoint{0.3, 0.4}, TorusPoint{0.1, 0.85}, TorusPoint{0.5, 0.5}}) {
    const double a = helmholtz_resummed(z, t2, m1).value.real() - 1.0 / m1;
    const double b = helmholtz_resummed(z, t2, m2).value.real() - 1.0 / m2;
    const double limit = (m1 * b - m2 * a) / (m1 - m2);
    ratio.push_back(limit / eisenstein_continued(1.0, {}, z, UpperHalfPoint(0.0, t2)).value.real());
  }
  const double mean = (ratio[0] + ratio[1] + ratio[2]) / 3.0;
  for (double r : ratio) CHECK(std::abs(r - mean) < 1e-7);
  CHECK(std::abs(mean - 1.0 / (4.0 * kPi * t2)) < 1e-7);
}

TEST_CASE("coth sum") {
  CHECK(std::abs(coth_identity(0.7).residual()) < 1e-12);
  CHECK(std::abs(coth_identity(1.0).residual()) < 1e-12);
  const IdentityResidual big = coth_identity(50.0);
  CHECK(std::abs(big.residual()) < 1e-12);
  CHECK(big.lhs < 0.032);

  // Brute force through 10^6 with the leading Euler-Maclaurin tail 1/L - 1/(2 L^2).
  double brute = 0.0;
  for (int l = 1000000; l >= 1; --l) brute += 1.0 / (double(l) * l + 1.0);
  brute += 1.0 / 1e6 - 0.5 / 1e12;
  CHECK(std::abs(coth_identity(1.0).lhs - brute) < 1e-12);
  CHECK_THROWS_AS(coth_identity(0.0), DomainError);
}
