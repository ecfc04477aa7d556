#include "mdf/jet.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mdf {
namespace {

using cplx = std::complex<double>;

struct Tables {
  std::array<Jet::MultiIndex, Jet::kSize> index{};
  // (a, b, target) with |a| + |b| <= order.
  std::vector<std::array<int, 3>> products;
  std::array<double, Jet::kSize> factorial{};  // prod k_i!

  Tables() {
    int n = 0;
    for (int deg = 0; deg <= Jet::kOrder; ++deg) {
      Jet::MultiIndex k{};
      enumerate(k, 0, deg, n);
    }
    if (n != Jet::kSize) throw std::logic_error("jet table size mismatch");
    for (int i = 0; i < Jet::kSize; ++i) {
      double f = 1.0;
      for (int v : index[i]) {
        for (int j = 2; j <= v; ++j) f *= j;
      }
      factorial[i] = f;
    }
    for (int a = 0; a < Jet::kSize; ++a) {
      for (int b = 0; b < Jet::kSize; ++b) {
        Jet::MultiIndex t{};
        int deg = 0;
        for (int v = 0; v < Jet::kVars; ++v) {
          t[v] = index[a][v] + index[b][v];
          deg += t[v];
        }
        if (deg <= Jet::kOrder) products.push_back({a, b, find(t)});
      }
    }
  }

  void enumerate(Jet::MultiIndex& k, int var, int remaining, int& n) {
    if (var == Jet::kVars - 1) {
      k[var] = remaining;
      index[n++] = k;
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      k[var] = v;
      enumerate(k, var + 1, remaining - v, n);
    }
    k[var] = 0;
  }

  int find(const Jet::MultiIndex& k) const {
    for (int i = 0; i < Jet::kSize; ++i) {
      if (index[i] == k) return i;
    }
    return -1;
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

Jet Jet::variable(Var var, double value) {
  Jet r(value);
  MultiIndex k{};
  k[var] = 1;
  r.c_[index_of(k)] = 1.0;
  return r;
}

int Jet::index_of(const MultiIndex& k) {
  const int i = tables().find(k);
  if (i < 0) throw std::out_of_range("jet multi-index exceeds order");
  return i;
}

const Jet::MultiIndex& Jet::multi_index(int i) { return tables().index[i]; }

cplx Jet::derivative(const MultiIndex& k) const {
  const int i = index_of(k);
  return c_[i] * tables().factorial[i];
}

cplx Jet::d(Var a) const {
  MultiIndex k{};
  ++k[a];
  return derivative(k);
}

cplx Jet::d(Var a, Var b) const {
  MultiIndex k{};
  ++k[a];
  ++k[b];
  return derivative(k);
}

cplx Jet::d(Var a, Var b, Var c) const {
  MultiIndex k{};
  ++k[a];
  ++k[b];
  ++k[c];
  return derivative(k);
}

Jet& Jet::operator+=(const Jet& o) {
  for (int i = 0; i < kSize; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (int i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (const auto& p : tables().products) r.c_[p[2]] += a.c_[p[0]] * b.c_[p[1]];
  return r;
}

Jet& Jet::operator*=(const Jet& o) {
  *this = *this * o;
  return *this;
}

Jet Jet::compose(const Jet& x, const std::array<cplx, 4>& derivs) {
  Jet h = x;
  h.c_[0] = 0.0;
  const Jet h2 = h * h;
  const Jet h3 = h2 * h;
  Jet r(derivs[0]);
  r += h * derivs[1];
  r += h2 * (derivs[2] / 2.0);
  r += h3 * (derivs[3] / 6.0);
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  const cplx x = b.value();
  const cplx inv = 1.0 / x;
  const Jet rb = Jet::compose(b, {inv, -inv * inv, 2.0 * inv * inv * inv, -6.0 * inv * inv * inv * inv});
  return a * rb;
}

Jet exp(const Jet& x) {
  const cplx e = std::exp(x.value());
  return Jet::compose(x, {e, e, e, e});
}

Jet sqrt(const Jet& x) {
  const cplx v = x.value();
  const cplx s = std::sqrt(v);
  return Jet::compose(x, {s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v)});
}

Jet log(const Jet& x) {
  const cplx inv = 1.0 / x.value();
  return Jet::compose(x, {std::log(x.value()), inv, -inv * inv, 2.0 * inv * inv * inv});
}

Jet pow(const Jet& x, cplx p) {
  const cplx v = x.value();
  const cplx f = std::pow(v, p);
  return Jet::compose(x, {f, p * f / v, p * (p - 1.0) * f / (v * v), p * (p - 1.0) * (p - 2.0) * f / (v * v * v)});
}

Jet sin(const Jet& x) {
  const cplx s = std::sin(x.value());
  const cplx c = std::cos(x.value());
  return Jet::compose(x, {s, c, -s, -c});
}

Jet cos(const Jet& x) {
  const cplx s = std::sin(x.value());
  const cplx c = std::cos(x.value());
  return Jet::compose(x, {c, -s, -c, s});
}

}  // namespace mdf
