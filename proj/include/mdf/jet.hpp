#pragma once

#include <array>
#include <complex>

namespace mdf {

/// Truncated multivariate Taylor polynomial (order 3) in the five real coordinates
/// (tau1, tau2, z1, z2, mu). Used to differentiate lattice-sum terms exactly.
class Jet {
 public:
  using cplx = std::complex<double>;
  static constexpr int kVars = 5;
  static constexpr int kOrder = 3;
  static constexpr int kSize = 56;

  enum Var { kTau1 = 0, kTau2 = 1, kZ1 = 2, kZ2 = 3, kMu = 4 };
  using MultiIndex = std::array<int, kVars>;

  Jet() { c_.fill(cplx{}); }
  Jet(cplx value) {  // NOLINT(google-explicit-constructor): scalars promote to constants
    c_.fill(cplx{});
    c_[0] = value;
  }
  Jet(double value) : Jet(cplx{value, 0.0}) {}  // NOLINT(google-explicit-constructor)

  /// The coordinate function x_var expanded around `value`.
  static Jet variable(Var var, double value);

  cplx value() const { return c_[0]; }
  /// Partial derivative d^|k| f / dx^k at the expansion point.
  cplx derivative(const MultiIndex& k) const;
  /// Convenience: derivative with respect to the listed variables (repeats allowed, at most three).
  cplx d(Var a) const;
  cplx d(Var a, Var b) const;
  cplx d(Var a, Var b, Var c) const;

  const cplx& coeff(int i) const { return c_[i]; }
  cplx& coeff(int i) { return c_[i]; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator*=(cplx s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(Jet a, cplx s) { return a *= s; }
  friend Jet operator*(cplx s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, double s) { return a *= cplx{s, 0.0}; }
  friend Jet operator*(double s, Jet a) { return a *= cplx{s, 0.0}; }
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator/(Jet a, double s) { return a *= cplx{1.0 / s, 0.0}; }
  Jet operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  /// f(x) for a univariate f given f, f', f'', f''' at x.value().
  static Jet compose(const Jet& x, const std::array<cplx, 4>& derivs);

  static int index_of(const MultiIndex& k);
  static const MultiIndex& multi_index(int i);

 private:
  std::array<cplx, kSize> c_;
};

Jet exp(const Jet& x);
Jet sqrt(const Jet& x);
Jet log(const Jet& x);
Jet pow(const Jet& x, std::complex<double> p);
Jet sin(const Jet& x);
Jet cos(const Jet& x);

}  // namespace mdf
