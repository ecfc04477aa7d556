#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mdf/lattice.hpp"

#include <cmath>
#include <set>

using namespace mdf;

TEST_CASE("shell enumeration") {
  CHECK(enumerate_shells(1).size() == 8);
  CHECK(enumerate_shells(2).size() == 24);
  const auto pts = enumerate_shells(3);
  CHECK(pts.size() == 48);
  CHECK(pts[24] == LatticePoint{-3, -3});
  std::set<std::pair<int, int>> seen;
  for (const auto& p : pts) {
    CHECK(!(p.r == 0 && p.l == 0));
    CHECK(std::max(std::abs(p.r), std::abs(p.l)) <= 3);
    seen.insert({p.r, p.l});
  }
  CHECK(seen.size() == pts.size());
  CHECK_THROWS_AS(enumerate_shells(0), DomainError);
}

TEST_CASE("lattice norm factor is a lower bound") {
  for (const UpperHalfPoint tau : {UpperHalfPoint(0.0, 1.0), UpperHalfPoint(0.2, 1.1), UpperHalfPoint(-0.45, 0.4),
                                   UpperHalfPoint(3.2, 0.7)}) {
    const double d = lattice_norm_factor(tau);
    double worst = 1e300;
    for (const auto& p : enumerate_shells(30)) {
      const double n = std::abs(double(p.r) * tau.value() + double(p.l));
      worst = std::min(worst, n / std::max(std::abs(p.r), std::abs(p.l)));
    }
    CHECK(d <= worst * (1 + 1e-12));
    CHECK(d > 0.2 * worst);
  }
}

TEST_CASE("exponential plan bounds the doubled-radius change") {
  const UpperHalfPoint tau(0.2, 1.1);
  const double c = 1.3;
  DecayModel m;
  m.rate = c;
  const auto plan = plan_truncation(m, tau, 1e-9);
  auto sum = [&](int R) {
    return sum_shells<cplx>(1, R, [&](int r, int l) { return cplx(std::exp(-c * std::abs(double(r) * tau.value() + double(l)))); })
        .value;
  };
  CHECK(plan.certificate.bound <= 1e-9);
  CHECK(std::abs(sum(plan.radius) - sum(2 * plan.radius)) <= plan.certificate.bound);
  const double delta = lattice_norm_factor(tau);
  const double cc = c * delta;
  const int R = plan.radius;
  CHECK(plan.certificate.bound ==
        doctest::Approx(8 * std::exp(-cc * R) * ((R + 1.0) / cc + 1 / (cc * cc))).epsilon(1e-12));
}

TEST_CASE("power plan for the fourth-power kernel") {
  const UpperHalfPoint tau(0.0, 1.0);
  DecayModel m;
  m.model = TailCertificate::Model::kPower;
  m.exponent = 4.0;
  const auto plan = plan_truncation(m, tau, 1e-4);
  CHECK(plan.certificate.bound <= 1e-4);
  const int R = plan.radius;
  CHECK(plan.certificate.bound == doctest::Approx(8.0 / 2.0 * std::pow(double(R), -2.0)));
  auto sum = [&](int RR) {
    return sum_shells<cplx>(1, RR, [&](int r, int l) { return cplx(std::pow(double(r * r + l * l), -2.0)); })
        .value.real();
  };
  CHECK(std::abs(sum(R) - sum(2 * R)) <= plan.certificate.bound);
  m.exponent = 2.0;
  CHECK_THROWS_AS(plan_truncation(m, tau, 1e-4), ConvergenceError);
  m.exponent = 0.9;
  CHECK_THROWS_AS(plan_truncation(m, tau, 1e-4), ConvergenceError);
}

TEST_CASE("degenerate tolerances are rejected") {
  DecayModel m;
  m.rate = 1.0;
  const UpperHalfPoint tau(0.0, 1.0);
  CHECK_THROWS_AS(plan_truncation(m, tau, std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(plan_truncation(m, tau, 0.0), DomainError);
  m.rate = 0.0;
  CHECK_THROWS_AS(plan_truncation(m, tau, 1e-3), DomainError);
}

TEST_CASE("majorant planner") {
  const UpperHalfPoint tau(0.2, 1.1);
  auto maj = [](double x) { return std::exp(-2.0 * x) * (1.0 + x); };
  const auto plan = plan_truncation_majorant(maj, tau, 1e-10);
  CHECK(plan.certificate.bound <= 1e-10);
  CHECK(majorant_tail(maj, tau, plan.radius) == doctest::Approx(plan.certificate.bound).epsilon(1e-6));
  auto sum = [&](int R) {
    return sum_shells<cplx>(1, R, [&](int r, int l) { return cplx(maj(std::abs(double(r) * tau.value() + double(l)))); }).value;
  };
  CHECK(std::abs(sum(plan.radius) - sum(2 * plan.radius)) <= plan.certificate.bound);
}

TEST_CASE("summation is bit-identical across thread counts") {
  const UpperHalfPoint tau(0.3, 0.9);
  auto term = [&](int r, int l) {
    const double n = std::abs(double(r) * tau.value() + double(l));
    return std::exp(cplx(0, 0.7 * r - 0.3 * l)) / (n * n * n);
  };
  set_thread_count(1);
  const auto a = sum_shells<cplx>(1, 200, term);
  set_thread_count(4);
  const auto b = sum_shells<cplx>(1, 200, term);
  set_thread_count(8);
  const auto c = sum_shells<cplx>(1, 200, term);
  set_thread_count(0);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.terms == 401 * 401 - 1);
}
