#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mdf/classical.hpp"
#include "mdf/error.hpp"
#include "mdf/massive.hpp"
#include "mdf/special_fns.hpp"

#include <cmath>

using namespace mdf;

namespace {
const UpperHalfPoint kTau(0.2, 1.1);
const UpperHalfPoint kI1(0.0, 1.0);
const TorusPoint kZ{0.3, 0.7};

// Reference values from an independent 30-digit brute-force evaluation.
constexpr double kE1Ref = -0.0103024996689080437050493958811;
constexpr double kEs17Ref = -0.0103461165794915545170115032007;
constexpr double kGeneralRef = -0.514766211986511136447144686403;
const cplx kTwistedRef(3.35155494604048170186519907171, 0.265927347990649374155067210978);
constexpr double kLogZRef = 0.00511193514325343320484381210547;
constexpr double kLogFRef = -0.032531718420580925723602536375;
constexpr double kLogFRef2 = -0.114716406637359238622815964349;

std::array<cplx, 4> exp_profile(double x, int) {
  const double e = std::exp(-2.0 * x);
  return {e, -2.0 * e, 4.0 * e, -8.0 * e};
}
}  // namespace

TEST_CASE("massive Kronecker-Eisenstein values") {
  const EvalResult e1 = e1_massive(kZ, kTau, 0.5, 1e-12);
  CHECK(std::abs(e1.value - kE1Ref) < 1e-12);
  CHECK(std::abs(e1.value.imag()) < 1e-15);
  CHECK(e1.err_bound < 1e-11);
  const EvalResult es = es_massive(1.7, kZ, kTau, 0.5, 1e-12);
  CHECK(std::abs(es.value - kEs17Ref) < 1e-12);
  const EvalResult s1 = es_massive(1.0, kZ, kTau, 0.5, 1e-12);
  CHECK(s1.value == e1.value);
  CHECK(s1.radius == e1.radius);
}

TEST_CASE("truncation certificate brackets the doubled radius") {
  for (double mu : {0.05, 0.5, 3.0}) {
    const EvalResult a = e1_massive(kZ, kTau, mu, 1e-9);
    const EvalResult b = e1_massive(kZ, kTau, mu, 1e-15);
    CHECK(b.radius > a.radius);
    CHECK(std::abs(a.value - b.value) <= a.err_bound);
  }
}

TEST_CASE("generalized family") {
  const RadialProfile h = RadialProfile::from_function(exp_profile, 2.0, 1.0);
  const EvalResult g = e_general(h, {1.0, 1.0, 0.5, 0.3, 2}, kZ, kTau, 0.5, 1e-12);
  CHECK(std::abs(g.value - kGeneralRef) < 1e-11);

  // Bessel profile with the es exponents reproduces es_massive.
  const EvalResult viaf = e_general(RadialProfile::bessel(1.7), {0.5, 0.5, -0.85, 0.85, 1}, kZ, kTau, 0.5, 1e-12);
  CHECK(std::abs(viaf.value - kEs17Ref) < 1e-12);

  // L = 0 removes the dependence on z.
  const EvalResult u = e_general(h, {1.0, 1.0, 0.5, 0.3, 0}, kZ, kTau, 0.5, 1e-12);
  const EvalResult v = e_general(h, {1.0, 1.0, 0.5, 0.3, 0}, {0.81, -0.27}, kTau, 0.5, 1e-12);
  CHECK(u.value == v.value);

  CHECK_THROWS_AS(e_general(h, {1.0, 0.0, 0.0, 0.0, 1}, kZ, kTau, 0.5), DomainError);
  CHECK_THROWS_AS(e_general(h, {1.0, 1.0, 0.0, 0.0, 1}, kZ, kTau, -1.0), DomainError);
  RadialProfile bare;
  CHECK_THROWS_AS(e_general(bare, {}, kZ, kTau, 0.5), DomainError);
}

TEST_CASE("profile certificates are validated") {
  // Declared rate faster than the actual decay.
  CHECK_THROWS_AS(RadialProfile::from_function(exp_profile, 3.0, 1.0), DomainError);
  // Declared ODE that the profile does not satisfy: h = e^{-2x} solves x^2 h'' + 0 x h' + (0 - 4 x^2) h = 0.
  CHECK_NOTHROW(RadialProfile::from_function(exp_profile, 2.0, 1.0, ProfileOde{0.0, 0.0, 4.0, 0.5}));
  CHECK_THROWS_AS(RadialProfile::from_function(exp_profile, 2.0, 1.0, ProfileOde{0.0, 0.0, 8.0, 0.5}), DomainError);
  RadialProfile b = RadialProfile::bessel(1.3);
  CHECK_NOTHROW(b.validate());
  b.ode->nu *= 2.0;
  CHECK_THROWS_AS(b.validate(), DomainError);
  CHECK_NOTHROW(RadialProfile::graph_kernel().validate());
}

TEST_CASE("twisted massive sum") {
  const EvalResult t = e1_massive_twisted({0.1, 0.2}, kZ, kTau, 0.5, 1e-12);
  CHECK(std::abs(t.value - kTwistedRef) < 1e-11);
  // Invariant under shifting w by lattice vectors.
  const EvalResult u = e1_massive_twisted({1.1, -1.8}, kZ, kTau, 0.5, 1e-12);
  CHECK(std::abs(u.value - t.value) < 1e-11);
  // w = 0 is the untwisted sum.
  const EvalResult w0 = e1_massive_twisted({}, kZ, kTau, 0.5, 1e-12);
  CHECK(std::abs(w0.value - kE1Ref) < 1e-11);
}

TEST_CASE("symmetries of the massive series") {
  const double mu = 0.5;
  const EvalResult base = es_massive(1.7, kZ, kTau, mu, 1e-13);
  const EvalResult shifted = es_massive(1.7, {kZ.alpha + 1.0, kZ.beta - 2.0}, kTau, mu, 1e-13);
  CHECK(std::abs(base.value - shifted.value) < 1e-12);
  // (tau, z) -> (tau + 1, z): characteristics (alpha, beta) -> (alpha, beta - alpha).
  const EvalResult t = es_massive(1.7, {kZ.alpha, kZ.beta - kZ.alpha}, kTau.translate(1.0), mu, 1e-13);
  CHECK(std::abs(base.value - t.value) < 1e-10);
  // (tau, z) -> (-1/tau, z/tau): characteristics (alpha, beta) -> (-beta, alpha).
  const EvalResult s = es_massive(1.7, {-kZ.beta, kZ.alpha}, kTau.invert(), mu, 1e-13);
  CHECK(std::abs(base.value - s.value) < 1e-10);
  const EvalResult s2 = es_massive(1.7, {kZ.beta, -kZ.alpha}, kTau.invert(), mu, 1e-13);
  CHECK(std::abs(base.value - s2.value) < 1e-10);
}

TEST_CASE("partition function") {
  const SeriesValue lz = log_partition_z(0.3, 0.7, 0.8, kTau);
  CHECK(std::abs(lz.value - kLogZRef) < 1e-13);
  CHECK(lz.tail < 1e-14);
  // Periodic in both characteristics.
  CHECK(std::abs(partition_z(1.3, -0.3, 0.8, kTau) - partition_z(0.3, 0.7, 0.8, kTau)) < 1e-13);
  // Modular covariance.
  const cplx zt = partition_z(0.3, 0.7, 0.8, kTau.translate(1.0));
  CHECK(std::abs(zt - partition_z(0.3, 1.0, 0.8, kTau)) < 1e-9);
  const cplx zs = partition_z(0.3, 0.7, 0.8, kTau.invert());
  CHECK(std::abs(zs - partition_z(0.7, -0.3, 0.8 / kTau.abs(), kTau)) < 1e-9);
  // Small-mass limit.
  const double m = 1e-3;
  const cplx lim = std::exp(-kTwoPi * 0.09 * kTau.im()) *
                   std::norm(theta1(kZ.on(kTau), kTau) / eta(kTau));
  CHECK(std::abs(partition_z(0.3, 0.7, m, kTau) - lim) < 1e-2);
  CHECK_THROWS_AS(partition_z(0.3, 0.7, 0.0, kTau), DomainError);
}

TEST_CASE("massive series against the product") {
  // -log Z with mass sqrt(mu / tau2) and the characteristic alpha taken with a plus sign.
  const double mu = 0.5;
  const double m = std::sqrt(mu / kTau.im());
  const cplx lz = log_partition_z(kZ.alpha, kZ.beta, m, kTau).value;
  CHECK(std::abs(-lz - kE1Ref) < 1e-8);
}

TEST_CASE("open-string product") {
  CHECK(std::abs(log_f_open(0.5, 1.2).value.real() - kLogFRef) < 1e-13);
  CHECK(std::abs(log_f_open(0.3, 2.0).value.real() - kLogFRef2) < 1e-13);
  // Inversion F_m(t) = F_{mt}(1/t).
  CHECK(std::abs(f_open(0.3, 2.0) - f_open(0.6, 0.5)) < 1e-9);
  // Integral form.
  const Estimate li = log_f_open_integral(0.5, 1.2);
  CHECK(std::abs(li.value.real() - kLogFRef) < 1e-10);
  // Dedekind eta limit with an improving trend.
  const double t = 1.3;
  const double eta_t = eta(UpperHalfPoint(0.0, t)).real();
  const double d3 = std::abs(f_open(1e-3, t) / std::sqrt(kTwoPi * 1e-3 * t) - eta_t);
  const double d4 = std::abs(f_open(1e-4, t) / std::sqrt(kTwoPi * 1e-4 * t) - eta_t);
  CHECK(d3 < 1e-2);
  CHECK(d4 < d3);
  CHECK_THROWS_AS(f_open(-1.0, 1.0), DomainError);
}

TEST_CASE("small-mass limits") {
  const TorusPoint half{0.0, 0.5};
  const double e1 = kronecker_limit_e1(half, kI1).real();
  const double g3 = std::abs(e1_massive(half, kI1, 1e-3, 1e-10).value.real() - e1);
  const double g4 = std::abs(e1_massive(half, kI1, 5e-4, 1e-10).value.real() - e1);
  CHECK(g4 < g3);
  // The approach is governed by pi mu (1 - gamma - log(pi mu) - E_0^reg(0, z)) + O(mu^2),
  // which is 1.6e-2 at mu = 1e-3.
  const double p0 = eisenstein_continued_regular(0.0, {}, half, kI1).value.real();
  for (double mu : {1e-3, 5e-4}) {
    const double lead = kPi * mu * (1.0 - 0.57721566490153286 - std::log(kPi * mu) - p0);
    const double gap = e1_massive(half, kI1, mu, 1e-11).value.real() - e1;
    CHECK(std::abs(gap - lead) < 30.0 * mu * mu);
  }
  const double e2 = eisenstein_direct(2.0, {}, kZ, kTau, 1e-7).value.real();
  CHECK(std::abs(es_massive(2.0, kZ, kTau, 1e-3, 1e-10).value.real() - e2) < 1e-3);
}

TEST_CASE("coefficient triples") {
  const CoefficientTriple gb = jacobi_g_coefficients(RadialProfile::bessel(1.7), 3);
  const double mu = 0.8;
  CHECK(std::abs(gb.c2(mu) - 9.0 / 2.0) < 1e-13);
  CHECK(std::abs(gb.c1(mu) - 9.0 / (2.0 * mu)) < 1e-13);
  CHECK(std::abs(gb.c0(mu) + 9.0 * 1.7 * 1.7 / (2.0 * mu * mu)) < 1e-12);
  const CoefficientTriple g0 = jacobi_g_coefficients(RadialProfile::bessel(1.7), 0);
  CHECK(g0.c0(mu) == 0.0);
  CHECK(g0.c1(mu) == 0.0);
  CHECK(g0.c2(mu) == 0.0);
  RadialProfile flat = RadialProfile::from_function(exp_profile, 2.0, 1.0, ProfileOde{0.0, 0.0, 4.0, 0.5});
  flat.ode = ProfileOde{0.0, 0.0, 0.0, 0.5};
  CHECK_THROWS_AS(jacobi_g_coefficients(flat, 1), DomainError);
  CHECK_THROWS_AS(jacobi_g_coefficients(RadialProfile::graph_kernel(), 1), DomainError);

  const CoefficientTriple m = maass_g_coefficients(1.0, -2.0);
  CHECK(std::abs(m.c2(mu) + mu * mu) < 1e-15);
  CHECK(std::abs(m.c1(mu) - 2.0 * mu) < 1e-15);
  CHECK(std::abs(m.c0(mu) + 2.0) < 1e-15);
  CHECK(maass_g_coefficients(0.5, 0.0).c0(mu) == 0.0);
  CHECK(maass_g_coefficients(0.5, -1.0).c0(mu) == 0.0);
  CHECK_THROWS_AS(maass_g_coefficients(0.0, 1.0), DomainError);

  // Conjugating the normalized Bessel triple by g = mu^{1/2}, phi = mu^{1/2} gives (0, 0, 2 mu) at s = 1.
  const CoefficientTriple c =
      conjugate_triple(jacobi_g_coefficients(RadialProfile::bessel(1.0), 1), SmoothMap::power(0.5), SmoothMap::power(0.5));
  CHECK(std::abs(c.c2(mu) - 2.0 * mu) < 1e-13);
  CHECK(std::abs(c.c1(mu)) < 1e-13);
  CHECK(std::abs(c.c0(mu)) < 1e-13);
  // The identity map leaves a triple unchanged.
  const CoefficientTriple id = conjugate_triple(m, SmoothMap::constant(1.0), SmoothMap::identity());
  CHECK(std::abs(id.c1(mu) - m.c1(mu)) < 1e-15);
  CHECK(std::abs(id.c0(mu) - m.c0(mu)) < 1e-15);
}

TEST_CASE("equivalence transform") {
  const SeriesPtr es = make_es_series(1.7);
  const SeriesPoint p{kTau, kZ, 0.5};
  const SeriesPtr same = equivalence_transform(es, SmoothMap::constant(1.0), SmoothMap::identity());
  CHECK(same->evaluate(p, 1e-12).value == es->evaluate(p, 1e-12).value);

  // [a, b, c, d, L] at mu equals mu^d times [1, b, c, 0, L] at mu^a; conversely the normalized
  // family is mu^{-d/a} times the general one at mu^{1/a}.
  const RadialProfile h = RadialProfile::bessel(1.7);
  const SeriesPtr normalized = make_family_series(h, {1.0, 0.5, -0.85, 0.0, 1});
  const SeriesPtr general = make_family_series(h, {0.5, 0.5, -0.85, 0.85, 1});
  const SeriesPtr back = equivalence_transform(general, SmoothMap::power(-1.7), SmoothMap::power(2.0));
  const SeriesPoint q{kTau, kZ, std::sqrt(0.5)};
  CHECK(std::abs(back->evaluate(q, 1e-13).value - normalized->evaluate(q, 1e-13).value) < 1e-12);

  // Jets follow the chain rule in mu.
  const SeriesPtr warped = equivalence_transform(es, SmoothMap::affine(1.0, 1.0), SmoothMap::power(1.0, 2.0));
  const Jet j = warped->evaluate_jet(p, 1e-12);
  const double h_mu = 1e-4;
  auto at = [&](double mu) { return warped->evaluate({kTau, kZ, mu}, 1e-14).value; };
  CHECK(std::abs(j.value() - at(0.5)) < 1e-12);
  const cplx fd1 = (at(0.5 + h_mu) - at(0.5 - h_mu)) / (2.0 * h_mu);
  CHECK(std::abs(j.d(Jet::kMu) - fd1) < 1e-8);
  const cplx fd2 = (at(0.5 + h_mu) - 2.0 * at(0.5) + at(0.5 - h_mu)) / (h_mu * h_mu);
  CHECK(std::abs(j.d(Jet::kMu, Jet::kMu) - fd2) < 1e-5);

  CHECK_THROWS_AS(equivalence_transform(es, SmoothMap::affine(1.0, -1.0), SmoothMap::identity()), DomainError);
  CHECK_THROWS_AS(equivalence_transform(es, SmoothMap::constant(1.0), SmoothMap::affine(1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(equivalence_transform(es, SmoothMap::constant(1.0), SmoothMap::constant(2.0)), DomainError);
}
