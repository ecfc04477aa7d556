#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mdf/classical.hpp"
#include "mdf/diffops.hpp"
#include "mdf/error.hpp"
#include "mdf/massive.hpp"

#include <cmath>
#include <random>

using namespace mdf;

namespace {
const UpperHalfPoint kTau(0.2, 1.1);
const SeriesPoint kAtZero{kTau, {}, 0.7};
const SeriesPoint kOffLattice{kTau, {0.3, 0.4}, 0.7};

PointFunction values_of(const SeriesPtr& s, double tol = 1e-13) {
  return [s, tol](const SeriesPoint& p) { return s->evaluate(p, tol).value; };
}

CoefficientTriple es_jacobi_triple(double s) {
  return conjugate_triple(jacobi_g_coefficients(RadialProfile::bessel(s), 1), SmoothMap::power(s / 2.0),
                          SmoothMap::power(0.5));
}

// f(tau) + a mu for a modular function f.
class AffineDeformation final : public LatticeSeries {
 public:
  AffineDeformation(SeriesPtr f, cplx a) : f_(std::move(f)), a_(a) {}
  EvalResult evaluate(const SeriesPoint& p, double tol) const override {
    EvalResult r = f_->evaluate(p, tol);
    r.value += a_ * p.mu;
    return r;
  }
  Jet evaluate_jet(const SeriesPoint& p, double tol) const override {
    return f_->evaluate_jet(p, tol) + Jet::variable(Jet::kMu, p.mu) * a_;
  }

 private:
  SeriesPtr f_;
  cplx a_;
};
}  // namespace

TEST_CASE("hyperbolic Laplacian on Eisenstein series") {
  const SeriesPtr e2 = make_eisenstein_series(2.0, {}, true);
  const cplx lap = apply_termwise(*e2, OperatorSpec::laplacian_tau(), kAtZero);
  const cplx val = e2->evaluate(kAtZero, 1e-13).value;
  CHECK(std::abs(lap + 2.0 * val) < 1e-12);
  const cplx fd = apply_fd(values_of(e2), OperatorSpec::laplacian_tau(), kAtZero);
  CHECK(std::abs(fd - lap) < 1e-5 * std::abs(lap));
  for (double s : {1.5, 2.5}) {
    const SeriesPtr e = make_eisenstein_series(s, {}, true);
    const cplx l = apply_termwise(*e, OperatorSpec::laplacian_tau(), kAtZero);
    CHECK(std::abs(l - s * (1.0 - s) * e->evaluate(kAtZero, 1e-13).value) < 1e-11);
  }
}

TEST_CASE("finite differences on elementary functions") {
  const PointFunction constant = [](const SeriesPoint&) { return cplx(3.0); };
  CHECK(std::abs(apply_fd(constant, OperatorSpec::laplacian_tau(), kAtZero)) < 1e-10);
  const PointFunction im_tau = [](const SeriesPoint& p) { return cplx(p.tau.im()); };
  CHECK(std::abs(apply_fd(im_tau, OperatorSpec::laplacian_tau(), kAtZero)) < 1e-10);
  // Weight k adds i k tau2 (d1 + i d2); on tau2 that is -k tau2.
  CHECK(std::abs(apply_fd(im_tau, OperatorSpec::laplacian_tau(2.0), kAtZero) + 2.0 * kTau.im()) < 1e-9);
  // |z|^2 has d_z d_zbar = 1.
  const PointFunction norm_z = [](const SeriesPoint& p) { return cplx(std::norm(p.z.on(p.tau))); };
  CHECK(std::abs(apply_fd(norm_z, OperatorSpec::laplacian_z(), kOffLattice) - 2.0 * kTau.im()) < 1e-8);
}

TEST_CASE("stencil and operator validation") {
  StencilSpec big = StencilSpec::standard(kOffLattice, OperatorSpec::laplacian_z());
  big.steps[Jet::kZ1] = 0.1;
  const PointFunction one = [](const SeriesPoint&) { return cplx(1.0); };
  CHECK_THROWS_AS(apply_fd(one, OperatorSpec::laplacian_z(), kOffLattice, big), StencilError);
  // Differentiating in z at a lattice point is impossible.
  CHECK_THROWS_AS(apply_fd(one, OperatorSpec::laplacian_z(), kAtZero), StencilError);
  CHECK_NOTHROW(apply_fd(one, OperatorSpec::laplacian_tau(), kAtZero));
  CHECK_THROWS_AS(OperatorSpec({OperatorSpec::Kind::kCasimir, 1.0, 0.0, 0.0}).validate(), UnsupportedError);
  CHECK_THROWS_AS(OperatorSpec({OperatorSpec::Kind::kLaplacianZ, 0.0, 1.0, 0.3}).validate(), UnsupportedError);
  CHECK_NOTHROW(OperatorSpec::laplacian_tau(4.0).validate());
}

TEST_CASE("Green's function and the z-Laplacian") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  for (int i = 0; i < 10; ++i) {
    const TorusPoint z{u(rng), u(rng)};
    if (std::abs(z.on(kTau)) < 0.05) continue;
    CHECK(std::abs(laplace_green_e1(z, kTau) - kPi / kTau.im()) < 1e-7);
  }
  CHECK_THROWS_AS(laplace_green_e1({}, kTau), SingularInputError);
  CHECK(delta_es_residual(2.0, {}, {0.3, 0.4}, UpperHalfPoint(0.0, 1.0)).relative() < 1e-7);
  CHECK(delta_es_residual(1.0, {}, {0.3, 0.4}, kTau).relative() < 1e-10);
  CHECK(delta_es_residual(2.5, {0.2, 0.1}, {0.3, 0.4}, kTau).relative() < 1e-6);
  CHECK_THROWS_AS(delta_es_residual(2.0, {}, {1.0, 0.0}, kTau), SingularInputError);
  // At s = 1 the equation reads Delta_z E_1 = 2 pi.
  const SeriesPtr e1 = make_eisenstein_series(1.0);
  CHECK(std::abs(apply_termwise(*e1, OperatorSpec::laplacian_z(), kOffLattice) - kTwoPi) < 1e-10);
}

TEST_CASE("Casimir cancels term by term") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.5, 0.5), pos(0.6, 1.6), m(0.1, 2.0);
  std::uniform_int_distribution<int> lat(-4, 4);
  const RadialProfile h = RadialProfile::bessel(1.7);
  const FamilyParams fp = es_family_params(1.7);
  for (int i = 0; i < 50; ++i) {
    const SeriesPoint p{UpperHalfPoint(u(rng), pos(rng)), {u(rng), u(rng)}, m(rng)};
    int r = lat(rng), l = lat(rng);
    if (r == 0 && l == 0) r = 1;
    const CasimirParts a = casimir_parts(eisenstein_term_jet(1.7, p, r, l), p);
    CHECK(std::abs(a.first + a.second) <= 1e-9 * std::abs(a.first));
    const CasimirParts b = casimir_parts(family_term_jet(h, fp, p, r, l), p);
    CHECK(std::abs(b.first + b.second) <= 1e-9 * std::abs(b.first));
  }
}

TEST_CASE("Casimir on summed series") {
  const SeriesPtr e1 = make_eisenstein_series(1.0);
  CHECK(std::abs(apply_termwise(*e1, OperatorSpec::casimir(), kOffLattice)) < 1e-10);
  const SeriesPtr m1 = make_es_series(1.0);
  const Jet j = m1->evaluate_jet(kOffLattice, 1e-13);
  const CasimirParts c = casimir_parts(j, kOffLattice);
  CHECK(std::abs(c.first) > 1e-3);
  CHECK(std::abs(c.first + c.second) < 1e-10 * std::abs(c.first));
  // Finite-difference oracle for the third-order operator.
  const StencilSpec wide = StencilSpec::standard(kOffLattice, OperatorSpec::casimir(), 5e-3);
  const cplx fd = apply_fd(values_of(m1), OperatorSpec::casimir(), kOffLattice, wide);
  CHECK(std::abs(fd) < 1e-3 * std::abs(c.first));
}

TEST_CASE("Maass residuals") {
  const SeriesPtr half = make_family_series(RadialProfile::bessel(1.3), {1.0, 0.5, -1.0, 0.0, 0});
  const OperatorResidual a = residual_maass(*half, maass_g_coefficients(0.5, -1.0), kAtZero);
  CHECK(a.relative() < 1e-6);
  CHECK(std::abs(a.residual) < 1e-9 * a.reference);
  const OperatorResidual afd = residual_maass_fd(values_of(half), maass_g_coefficients(0.5, -1.0), kAtZero);
  CHECK(afd.method == OperatorResidual::Method::kFiniteDifference);
  CHECK(std::abs(afd.residual) < 1e-3 * afd.reference);

  const SeriesPtr graph = make_family_series(RadialProfile::graph_kernel(), {0.5, 0.5, -1.0, 1.0, 0});
  const OperatorResidual g = residual_maass(*graph, maass_g_coefficients(1.0, -2.0), kAtZero);
  CHECK(g.relative() < 1e-6);
  CHECK(std::abs(g.residual) < 1e-9 * g.reference);

  for (double s : {1.0, 1.7}) {
    const SeriesPtr es = make_es_series(s);
    const CoefficientTriple t =
        conjugate_triple(maass_g_coefficients(0.5, -s / 2.0), SmoothMap::power(s / 2.0), SmoothMap::power(0.5));
    const OperatorResidual r = residual_maass(*es, t, kAtZero);
    CHECK(std::abs(r.residual) < 1e-9 * r.reference);
  }

  // f + a mu with g2 = 0, g1 = -s(1-s) mu, g0 = s(1-s).
  const double s = 2.0, ev = s * (1.0 - s);
  const AffineDeformation def(make_eisenstein_series(s, {}, true), 0.37);
  const CoefficientTriple tri{[=](double) { return cplx(ev); }, [=](double mu) { return cplx(-ev * mu); },
                              [](double) { return cplx(0.0); }};
  CHECK(std::abs(residual_maass(def, tri, kAtZero).residual) < 1e-11);
}

TEST_CASE("Jacobi residuals") {
  for (double s : {1.0, 1.7}) {
    const SeriesPtr es = make_es_series(s);
    const JacobiResiduals r = residual_jacobi(*es, es_jacobi_triple(s), 0.0, kOffLattice);
    CHECK(r.casimir.relative() < 1e-6);
    CHECK(r.laplacian.relative() < 1e-6);
    CHECK(std::abs(r.laplacian.residual) < 1e-9 * r.laplacian.reference);
  }
  // At s = 1 only the second-order coefficient survives.
  const CoefficientTriple t1 = es_jacobi_triple(1.0);
  CHECK(std::abs(t1.c0(0.7)) < 1e-13);
  CHECK(std::abs(t1.c1(0.7)) < 1e-13);

  // The normalized Bessel family with the unconjugated coefficients.
  const SeriesPtr norm = make_family_series(RadialProfile::bessel(1.7), {1.0, 0.5, -0.85, 0.0, 2});
  const JacobiResiduals n = residual_jacobi(*norm, jacobi_g_coefficients(RadialProfile::bessel(1.7), 2), 0.0,
                                            kOffLattice);
  CHECK(std::abs(n.laplacian.residual) < 1e-9 * n.laplacian.reference);

  // L = 0: no z dependence and all coefficients vanish.
  const SeriesPtr flat = make_family_series(RadialProfile::bessel(1.7), {1.0, 0.5, -0.85, 0.0, 0});
  const JacobiResiduals f = residual_jacobi(*flat, jacobi_g_coefficients(RadialProfile::bessel(1.7), 0), 0.0,
                                            kOffLattice);
  CHECK(std::abs(f.laplacian.residual) < 1e-14);

  // Equivalent forms carry the conjugated coefficients.
  const SmoothMap g = SmoothMap::affine(1.0, 1.0), phi = SmoothMap::power(1.0, 2.0);
  const SeriesPtr warped = equivalence_transform(make_es_series(1.7), g, phi);
  const JacobiResiduals w = residual_jacobi(*warped, conjugate_triple(es_jacobi_triple(1.7), g, phi), 0.0, kOffLattice);
  CHECK(w.laplacian.relative() < 1e-6);
  CHECK(std::abs(w.laplacian.residual) < 1e-9 * w.laplacian.reference);
  CHECK(w.casimir.relative() < 1e-6);
  const CoefficientTriple wm = conjugate_triple(
      conjugate_triple(maass_g_coefficients(0.5, -0.85), SmoothMap::power(0.85), SmoothMap::power(0.5)), g, phi);
  const OperatorResidual wr = residual_maass(*warped, wm, kAtZero);
  CHECK(std::abs(wr.residual) < 1e-9 * wr.reference);
}

TEST_CASE("term-wise and finite-difference operators agree") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.4, 0.4), pos(0.8, 1.4), m(0.3, 1.5);
  const SeriesPtr es = make_es_series(1.7);
  for (int i = 0; i < 10; ++i) {
    const SeriesPoint p{UpperHalfPoint(u(rng), pos(rng)), {u(rng) + 0.05, u(rng) + 0.5}, m(rng)};
    for (const OperatorSpec& op : {OperatorSpec::laplacian_tau(), OperatorSpec::laplacian_z()}) {
      const cplx a = apply_termwise(*es, op, p);
      const cplx b = apply_fd(values_of(es), op, p);
      CHECK(std::abs(a - b) < 1e-5 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("Fourier modes") {
  const auto c = fourier_modes([](double) { return cplx(2.5); }, 2, 16);
  CHECK(std::abs(c[2] - 2.5) < 1e-15);
  CHECK(std::abs(c[0]) < 1e-15);
  CHECK_THROWS_AS(fourier_modes([](double) { return cplx(1.0); }, 8, 16), DomainError);
  // Nonzero modes of E_s(0, 0; tau) follow sqrt(tau2) K_{s-1/2}(2 pi |n| tau2).
  const double s = 2.5;
  std::vector<double> ratio;
  for (double t2 : {0.8, 1.0, 1.3}) {
    EisensteinOptions opt;
    opt.allow_lattice_points = true;
    const auto modes = fourier_modes(
        [&](double t1) { return eisenstein_continued(s, {}, {}, UpperHalfPoint(t1, t2), 1e-13, opt).value; }, 2, 32);
    CHECK(std::abs(modes[1] - std::conj(modes[3])) < 1e-13);
    ratio.push_back((modes[3] / (std::sqrt(t2) * bessel_k(s - 0.5, kTwoPi * t2).value)).real());
  }
  CHECK(std::abs(ratio[1] / ratio[0] - 1.0) < 1e-5);
  CHECK(std::abs(ratio[2] / ratio[0] - 1.0) < 1e-5);
}
