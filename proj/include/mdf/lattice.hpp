#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

#include "mdf/jet.hpp"
#include "mdf/summation.hpp"
#include "mdf/types.hpp"

namespace mdf {

struct LatticePoint {
  int r = 0;
  int l = 0;
  bool operator==(const LatticePoint&) const = default;
};

/// Calls f(r, l) for the 8*rho points of Chebyshev radius rho in canonical order:
/// r ascending, and within a row l ascending. rho = 0 yields the origin only.
template <class F>
void for_each_in_shell(int rho, F&& f) {
  if (rho == 0) {
    f(0, 0);
    return;
  }
  for (int r = -rho; r <= rho; ++r) {
    if (r == -rho || r == rho) {
      for (int l = -rho; l <= rho; ++l) f(r, l);
    } else {
      f(r, -rho);
      f(r, rho);
    }
  }
}

/// All nonzero lattice points with max(|r|,|l|) <= R, shell by shell in canonical order.
std::vector<LatticePoint> enumerate_shells(int R);

/// Certified bound on the omitted part of a truncated lattice sum.
struct TailCertificate {
  enum class Model { kExponential, kPower, kMajorant };
  Model model = Model::kExponential;
  double rate = 0.0;      // exponential rate per unit |r tau + l|
  double exponent = 0.0;  // power-law exponent p in |r tau + l|^-p
  double bound = 0.0;
  int radius = 0;
};

/// Decay of the summand in terms of the lattice norm |r tau + l|:
/// exponential: |term| <= amplitude * exp(-rate * |lambda|);
/// power:       |term| <= amplitude * |lambda|^-exponent.
struct DecayModel {
  TailCertificate::Model model = TailCertificate::Model::kExponential;
  double rate = 0.0;
  double exponent = 0.0;
  double amplitude = 1.0;
};

struct TruncationPlan {
  int radius = 1;
  TailCertificate certificate;
};

/// The constant delta(tau) with |r tau + l| >= delta * max(|r|,|l|) for all integers r, l.
/// delta^2 is the smallest eigenvalue of the Gram matrix [[|tau|^2, tau1], [tau1, 1]] of the
/// lattice basis, and max(|r|,|l|) <= sqrt(r^2 + l^2).
double lattice_norm_factor(const UpperHalfPoint& tau);

/// Smallest radius whose integral-comparison tail bound is below tol.
TruncationPlan plan_truncation(const DecayModel& model, const UpperHalfPoint& tau, double tol);

/// Planner for a summand bounded by majorant(x) whenever |lambda| >= x; the majorant must be
/// nonincreasing on the region where it is used and decay at least geometrically along
/// Chebyshev shells. The tail is summed shell by shell and closed with a geometric remainder.
TruncationPlan plan_truncation_majorant(const std::function<double(double)>& majorant, const UpperHalfPoint& tau,
                                        double tol, int min_radius = 1, int max_radius = 20000);

/// Tail bound of an already chosen radius under a majorant (same contract as above).
double majorant_tail(const std::function<double(double)>& majorant, const UpperHalfPoint& tau, int radius);

// ---------------------------------------------------------------------------
// Deterministic parallel shell summation.

/// Worker threads used by lattice sums. Defaults to MDF_THREADS or the hardware concurrency.
int thread_count();
/// Overrides the worker count (0 restores the default). Results do not depend on it.
void set_thread_count(int n);

template <class T>
class Accumulator;

template <>
class Accumulator<cplx> {
 public:
  void add(const cplx& x) { s_.add(x); }
  void add(const Accumulator& o) { s_.add(o.value()); }
  cplx value() const { return s_.value(); }

 private:
  ComplexSum s_;
};

template <>
class Accumulator<Jet> {
 public:
  void add(const Jet& x) {
    for (int i = 0; i < Jet::kSize; ++i) s_[i].add(x.coeff(i));
  }
  void add(const Accumulator& o) { add(o.value()); }
  Jet value() const {
    Jet r;
    for (int i = 0; i < Jet::kSize; ++i) r.coeff(i) = s_[i].value();
    return r;
  }

 private:
  std::array<ComplexSum, Jet::kSize> s_{};
};

template <class T>
struct LatticeSum {
  T value{};
  std::int64_t terms = 0;
};

/// Sums term(r, l) over shells first_shell..R. Each shell is reduced on its own with compensated
/// summation and the shell totals are combined in shell order, so the result is independent of
/// the number of threads. term may return std::nullopt-like skips by returning T{} and false via
/// the `include` predicate.
template <class T, class Term, class Include>
LatticeSum<T> sum_shells(int first_shell, int R, const Term& term, const Include& include) {
  const int n_shells = R - first_shell + 1;
  if (n_shells <= 0) return {};
  std::vector<Accumulator<T>> shell_sums(n_shells);
  std::vector<std::int64_t> counts(n_shells, 0);
  auto work = [&](int idx) {
    const int rho = first_shell + idx;
    Accumulator<T> acc;
    std::int64_t c = 0;
    for_each_in_shell(rho, [&](int r, int l) {
      if (!include(r, l)) return;
      acc.add(term(r, l));
      ++c;
    });
    shell_sums[idx] = acc;
    counts[idx] = c;
  };
  const int threads = std::min(thread_count(), n_shells);
  if (threads <= 1 || n_shells < 4) {
    for (int i = 0; i < n_shells; ++i) work(i);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    // Shells grow linearly in size; a strided assignment balances the load.
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = t; i < n_shells; i += threads) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Accumulator<T> total;
  LatticeSum<T> out;
  for (int i = 0; i < n_shells; ++i) {
    total.add(shell_sums[i]);
    out.terms += counts[i];
  }
  out.value = total.value();
  return out;
}

template <class T, class Term>
LatticeSum<T> sum_shells(int first_shell, int R, const Term& term) {
  return sum_shells<T>(first_shell, R, term, [](int, int) { return true; });
}

}  // namespace mdf
