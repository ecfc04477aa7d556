#include "mdf/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace mdf {

std::vector<LatticePoint> enumerate_shells(int R) {
  if (R < 1) throw DomainError("enumerate_shells: radius must be at least 1");
  std::vector<LatticePoint> pts;
  pts.reserve(static_cast<std::size_t>((2 * R + 1) * (2 * R + 1) - 1));
  for (int rho = 1; rho <= R; ++rho) {
    for_each_in_shell(rho, [&](int r, int l) { pts.push_back({r, l}); });
  }
  return pts;
}

double lattice_norm_factor(const UpperHalfPoint& tau) {
  const double a = tau.re() * tau.re() + tau.im() * tau.im();
  const double b = tau.re();
  // Eigenvalues of [[a, b], [b, 1]]; the smaller one written to avoid cancellation.
  const double tr = a + 1.0;
  const double disc = std::sqrt((a - 1.0) * (a - 1.0) + 4.0 * b * b);
  const double big = 0.5 * (tr + disc);
  const double det = a - b * b;  // = tau2^2
  return std::sqrt(det / big);
}

TruncationPlan plan_truncation(const DecayModel& model, const UpperHalfPoint& tau, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("plan_truncation: tolerance must be positive and finite");
  if (!(model.amplitude >= 0.0)) throw DomainError("plan_truncation: amplitude must be nonnegative");
  const double delta = lattice_norm_factor(tau);
  TruncationPlan plan;
  plan.certificate.model = model.model;
  if (model.model == TailCertificate::Model::kExponential) {
    if (!(model.rate > 0.0)) throw DomainError("plan_truncation: exponential model needs a positive rate");
    // |term| <= A e^{-c rho} on shell rho, c = rate * delta. Integral comparison:
    // sum_{rho > R} 8 rho e^{-c rho} <= 8 e^{-cR} ((R+1)/c + 1/c^2).
    const double c = model.rate * delta;
    auto bound = [&](int R) {
      return 8.0 * model.amplitude * std::exp(-c * R) * ((R + 1.0) / c + 1.0 / (c * c));
    };
    int R = 1;
    while (bound(R) > tol) {
      if (R > 1000000) throw ConvergenceError("plan_truncation: radius exceeds budget");
      R = (bound(2 * R) > tol) ? 2 * R : R + 1;
    }
    plan.radius = R;
    plan.certificate.rate = model.rate;
    plan.certificate.bound = bound(R);
  } else if (model.model == TailCertificate::Model::kPower) {
    const double p = model.exponent;
    if (!(p > 2.0)) throw ConvergenceError("plan_truncation: a two-dimensional lattice sum needs power exponent > 2");
    // |term| <= A (delta rho)^{-p}; sum_{rho>R} 8 rho^{1-p} <= 8 R^{2-p} / (p - 2).
    const double a = model.amplitude * std::pow(delta, -p);
    auto bound = [&](double R) { return 8.0 * a * std::pow(R, 2.0 - p) / (p - 2.0); };
    double R = std::ceil(std::pow(8.0 * a / ((p - 2.0) * tol), 1.0 / (p - 2.0)));
    R = std::max(R, 1.0);
    if (R > 1e6) throw ConvergenceError("plan_truncation: radius exceeds budget");
    plan.radius = static_cast<int>(R);
    while (plan.radius > 1 && bound(plan.radius - 1) <= tol) --plan.radius;
    plan.certificate.exponent = p;
    plan.certificate.bound = bound(plan.radius);
  } else {
    throw DomainError("plan_truncation: use plan_truncation_majorant for majorant models");
  }
  plan.certificate.radius = plan.radius;
  return plan;
}

namespace {

// Shell contributions 8 rho M(delta rho) for rho = 1, 2, ... until they are negligible and
// decreasing geometrically; returns suffix tails tail[R] = sum_{rho > R}.
std::vector<double> shell_tails(const std::function<double(double)>& majorant, double delta, double floor,
                                int max_radius) {
  std::vector<double> t{0.0};
  double remainder = std::numeric_limits<double>::infinity();
  for (int rho = 1; rho <= max_radius + 64; ++rho) {
    t.push_back(8.0 * rho * majorant(delta * rho));
    if (rho > 2) {
      const double q = t[rho] / t[rho - 1];
      const double q_prev = t[rho - 1] / t[rho - 2];
      if (t[rho] == 0.0) {
        remainder = 0.0;
        break;
      }
      // Ratios that are below one and nonincreasing bound the rest of the tail geometrically.
      if (q < 1.0 && q <= q_prev * (1.0 + 1e-12) && t[rho] < floor) {
        remainder = t[rho] * q / (1.0 - q);
        break;
      }
    }
  }
  if (!std::isfinite(remainder)) throw ConvergenceError("majorant tail does not decay geometrically");
  std::vector<double> tail(t.size());
  double acc = remainder;
  for (int rho = static_cast<int>(t.size()) - 1; rho >= 0; --rho) {
    tail[rho] = acc;
    acc += t[rho];
  }
  return tail;
}

}  // namespace

TruncationPlan plan_truncation_majorant(const std::function<double(double)>& majorant, const UpperHalfPoint& tau,
                                        double tol, int min_radius, int max_radius) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("plan_truncation: tolerance must be positive and finite");
  const double delta = lattice_norm_factor(tau);
  const std::vector<double> tail = shell_tails(majorant, delta, tol * 1e-6, max_radius);
  TruncationPlan plan;
  plan.certificate.model = TailCertificate::Model::kMajorant;
  int R = std::max(1, min_radius);
  while (R < static_cast<int>(tail.size()) && tail[R] > tol) ++R;
  if (R >= static_cast<int>(tail.size()) || R > max_radius) {
    throw ConvergenceError("plan_truncation: radius exceeds budget");
  }
  plan.radius = R;
  plan.certificate.bound = tail[R];
  plan.certificate.radius = R;
  return plan;
}

double majorant_tail(const std::function<double(double)>& majorant, const UpperHalfPoint& tau, int radius) {
  const double delta = lattice_norm_factor(tau);
  double acc = 0.0;
  double prev = 0.0, prev2 = 0.0;
  for (int rho = radius + 1;; ++rho) {
    const double t = 8.0 * rho * majorant(delta * rho);
    acc += t;
    if (t == 0.0) return acc;
    if (rho > radius + 2) {
      const double q = t / prev;
      const double qp = prev / prev2;
      if (q < 1.0 && q <= qp * (1.0 + 1e-12) && t < 1e-6 * acc) return acc + t * q / (1.0 - q);
    }
    if (rho > radius + 1000000) throw ConvergenceError("majorant tail does not decay");
    prev2 = prev;
    prev = t;
  }
}

namespace {

std::atomic<int> g_thread_override{0};

int default_threads() {
  if (const char* env = std::getenv("MDF_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int thread_count() {
  const int o = g_thread_override.load(std::memory_order_relaxed);
  if (o > 0) return o;
  static const int d = default_threads();
  return d;
}

void set_thread_count(int n) { g_thread_override.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

}  // namespace mdf
