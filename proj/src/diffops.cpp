#include "mdf/diffops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "mdf/classical.hpp"
#include "mdf/error.hpp"
#include "mdf/kernels.hpp"
#include "mdf/summation.hpp"

namespace mdf {
namespace {

using MultiIndex = Jet::MultiIndex;

// Linear combination of partial derivatives.
using DiffPoly = std::map<MultiIndex, cplx>;

DiffPoly partial(int var) {
  MultiIndex k{};
  ++k[var];
  return {{k, 1.0}};
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      MultiIndex k{};
      for (int v = 0; v < Jet::kVars; ++v) k[v] = ka[v] + kb[v];
      out[k] += ca * cb;
    }
  }
  return out;
}

DiffPoly operator+(DiffPoly a, const DiffPoly& b) {
  for (const auto& [k, c] : b) a[k] += c;
  return a;
}

DiffPoly operator*(cplx s, DiffPoly a) {
  for (auto& [k, c] : a) c *= s;
  return a;
}

// d/dz = (d1 - i d2)/2 and d/dzbar = (d1 + i d2)/2 in each complex variable.
DiffPoly wirtinger(int re, int im, double sign) {
  return cplx(0.5) * partial(re) + cplx(0.0, 0.5 * sign) * partial(im);
}

const DiffPoly& dz() {
  static const DiffPoly p = wirtinger(Jet::kZ1, Jet::kZ2, -1.0);
  return p;
}
const DiffPoly& dzb() {
  static const DiffPoly p = wirtinger(Jet::kZ1, Jet::kZ2, 1.0);
  return p;
}
const DiffPoly& dtau() {
  static const DiffPoly p = wirtinger(Jet::kTau1, Jet::kTau2, -1.0);
  return p;
}
const DiffPoly& dtaub() {
  static const DiffPoly p = wirtinger(Jet::kTau1, Jet::kTau2, 1.0);
  return p;
}

cplx apply_poly(const DiffPoly& poly, const PartialProvider& d) {
  cplx acc = 0.0;
  for (const auto& [k, c] : poly) {
    if (c != cplx(0.0)) acc += c * d(k);
  }
  return acc;
}

MultiIndex index_of_mu(int order) {
  MultiIndex k{};
  k[Jet::kMu] = order;
  return k;
}

double lattice_distance(const TorusPoint& z, const UpperHalfPoint& tau) {
  const TorusPoint red = z.reduced();
  double best = std::numeric_limits<double>::infinity();
  for (int r = -1; r <= 1; ++r) {
    for (int l = -1; l <= 1; ++l) best = std::min(best, std::abs(TorusPoint{red.alpha + r, red.beta + l}.on(tau)));
  }
  return best;
}

bool uses_z(const OperatorSpec& op) { return op.kind != OperatorSpec::Kind::kLaplacianTau; }

PartialProvider jet_partials(const Jet& f) {
  return [&f](const MultiIndex& k) { return f.derivative(k); };
}

// One-dimensional central-difference weights for derivative orders 0..3.
std::vector<std::pair<int, double>> central_weights(int order, double h) {
  switch (order) {
    case 0:
      return {{0, 1.0}};
    case 1:
      return {{-1, -0.5 / h}, {1, 0.5 / h}};
    case 2:
      return {{-1, 1.0 / (h * h)}, {0, -2.0 / (h * h)}, {1, 1.0 / (h * h)}};
    case 3: {
      const double h3 = h * h * h;
      return {{-2, -0.5 / h3}, {-1, 1.0 / h3}, {1, -1.0 / h3}, {2, 0.5 / h3}};
    }
    default:
      throw UnsupportedError("finite differences: derivative order above three");
  }
}

// Finite-difference partial derivatives of f around p; tau moves at fixed complex z.
PartialProvider fd_partials(const PointFunction& f, const SeriesPoint& p, const StencilSpec& st) {
  const std::array<double, Jet::kVars> x0{p.tau.re(), p.tau.im(), p.z.on(p.tau).real(), p.z.on(p.tau).imag(), p.mu};
  auto eval_at = [f](const std::array<double, Jet::kVars>& x) {
    const UpperHalfPoint tau(x[0], x[1]);
    return f({tau, TorusPoint::from_complex({x[2], x[3]}, tau), x[4]});
  };
  return [=](const MultiIndex& k) {
    std::array<std::vector<std::pair<int, double>>, Jet::kVars> w;
    for (int v = 0; v < Jet::kVars; ++v) w[v] = central_weights(k[v], st.steps[v]);
    ComplexSum acc;
    std::array<double, Jet::kVars> x = x0;
    // Tensor-product stencil, enumerated with a mixed-radix counter.
    std::array<std::size_t, Jet::kVars> idx{};
    while (true) {
      double weight = 1.0;
      for (int v = 0; v < Jet::kVars; ++v) {
        const auto& [off, wt] = w[v][idx[v]];
        x[v] = x0[v] + off * st.steps[v];
        weight *= wt;
      }
      acc.add(weight * eval_at(x));
      int v = 0;
      while (v < Jet::kVars && ++idx[v] == w[v].size()) idx[v++] = 0;
      if (v == Jet::kVars) break;
    }
    return acc.value();
  };
}

OperatorResidual make_residual(cplx residual, std::initializer_list<cplx> parts, OperatorResidual::Method m) {
  double ref = 0.0;
  for (const cplx& c : parts) ref = std::max(ref, std::abs(c));
  return {residual, ref, m};
}

OperatorResidual maass_from_partials(const PartialProvider& d, const CoefficientTriple& g, const SeriesPoint& p,
                                     double k, OperatorResidual::Method method) {
  const cplx lhs = apply_partials(d, OperatorSpec::laplacian_tau(k), p.tau.im(), 0.0);
  const cplx t2 = g.c2(p.mu) * d(index_of_mu(2));
  const cplx t1 = g.c1(p.mu) * d(index_of_mu(1));
  const cplx t0 = g.c0(p.mu) * d(index_of_mu(0));
  return make_residual(lhs - (t2 + t1 + t0), {lhs, t2, t1, t0}, method);
}

}  // namespace

void OperatorSpec::validate() const {
  if (kind == Kind::kLaplacianTau) {
    if (m != 0.0) throw UnsupportedError("hyperbolic Laplacian: index must be zero");
    return;
  }
  if (k != 0.0 || m != 0.0) throw UnsupportedError("operator implemented for weight and index zero only");
}

StencilSpec StencilSpec::standard(const SeriesPoint& p, const OperatorSpec& op, double scale) {
  double len = p.tau.im();
  if (uses_z(op)) len = std::min(len, lattice_distance(p.z, p.tau));
  // Powers of two keep x0 +- h as exact as the coordinates allow.
  auto dyadic = [](double h) { return std::exp2(std::round(std::log2(h))); };
  StencilSpec s;
  const double h = dyadic(scale * len);
  s.steps = {h, h, h, h, dyadic(scale * p.mu)};
  return s;
}

void StencilSpec::validate(const SeriesPoint& p, const OperatorSpec& op) const {
  double len = p.tau.im();
  if (uses_z(op)) len = std::min(len, lattice_distance(p.z, p.tau));
  for (int v = 0; v < Jet::kVars; ++v) {
    const double limit = v == Jet::kMu ? p.mu / 100.0 : len / 100.0;
    if (!(steps[v] > 0.0) || !(steps[v] < limit)) throw StencilError("stencil step too large for the point");
  }
}

double OperatorResidual::relative() const { return std::abs(residual) / std::max(reference, 1.0); }

CasimirParts casimir_parts(const PartialProvider& d, double tau2, double z2) {
  static const DiffPoly first = dz() * dzb() * dzb() + dz() * dz() * dzb();
  static const DiffPoly second = dtaub() * dz() * dz() + dtau() * dzb() * dzb();
  return {-4.0 * tau2 * z2 * apply_poly(first, d), -4.0 * tau2 * tau2 * apply_poly(second, d)};
}

CasimirParts casimir_parts(const Jet& f, const SeriesPoint& p) {
  return casimir_parts(jet_partials(f), p.tau.im(), p.z.on(p.tau).imag());
}

cplx apply_partials(const PartialProvider& d, const OperatorSpec& op, double tau2, double z2) {
  op.validate();
  switch (op.kind) {
    case OperatorSpec::Kind::kLaplacianTau: {
      static const DiffPoly lap = partial(Jet::kTau1) * partial(Jet::kTau1) + partial(Jet::kTau2) * partial(Jet::kTau2);
      static const DiffPoly first = partial(Jet::kTau1) + cplx(0.0, 1.0) * partial(Jet::kTau2);
      return -tau2 * tau2 * apply_poly(lap, d) + cplx(0.0, op.k * tau2) * apply_poly(first, d);
    }
    case OperatorSpec::Kind::kLaplacianZ: {
      static const DiffPoly lap = dz() * dzb();
      return 2.0 * tau2 * apply_poly(lap, d);
    }
    case OperatorSpec::Kind::kCasimir: {
      const CasimirParts c = casimir_parts(d, tau2, z2);
      return c.first + c.second;
    }
  }
  return 0.0;
}

cplx apply_to_jet(const Jet& f, const OperatorSpec& op, const SeriesPoint& p) {
  return apply_partials(jet_partials(f), op, p.tau.im(), p.z.on(p.tau).imag());
}

cplx apply_termwise(const LatticeSeries& series, const OperatorSpec& op, const SeriesPoint& p, double tol) {
  op.validate();
  return apply_to_jet(series.evaluate_jet(p, tol), op, p);
}

cplx apply_fd(const PointFunction& f, const OperatorSpec& op, const SeriesPoint& p, const StencilSpec& stencil) {
  op.validate();
  stencil.validate(p, op);
  return apply_partials(fd_partials(f, p, stencil), op, p.tau.im(), p.z.on(p.tau).imag());
}

cplx apply_fd(const PointFunction& f, const OperatorSpec& op, const SeriesPoint& p) {
  return apply_fd(f, op, p, StencilSpec::standard(p, op));
}

OperatorResidual residual_maass(const LatticeSeries& f, const CoefficientTriple& g, const SeriesPoint& p, double k,
                                double tol) {
  const Jet j = f.evaluate_jet(p, tol);
  return maass_from_partials(jet_partials(j), g, p, k, OperatorResidual::Method::kTermwise);
}

OperatorResidual residual_maass_fd(const PointFunction& f, const CoefficientTriple& g, const SeriesPoint& p, double k) {
  const OperatorSpec op = OperatorSpec::laplacian_tau(k);
  const StencilSpec st = StencilSpec::standard(p, op);
  st.validate(p, op);
  return maass_from_partials(fd_partials(f, p, st), g, p, k, OperatorResidual::Method::kFiniteDifference);
}

JacobiResiduals residual_jacobi(const LatticeSeries& phi, const CoefficientTriple& g, cplx lambda, const SeriesPoint& p,
                                double tol) {
  const Jet j = phi.evaluate_jet(p, tol);
  const CasimirParts c = casimir_parts(j, p);
  const cplx lf = lambda * j.value();
  JacobiResiduals out;
  out.casimir = make_residual(c.first + c.second - lf, {c.first, c.second, lf}, OperatorResidual::Method::kTermwise);
  const cplx lap = apply_to_jet(j, OperatorSpec::laplacian_z(), p);
  const cplx t2 = g.c2(p.mu) * j.derivative(index_of_mu(2));
  const cplx t1 = g.c1(p.mu) * j.derivative(index_of_mu(1));
  const cplx t0 = g.c0(p.mu) * j.value();
  out.laplacian = make_residual(lap + t2 + t1 + t0, {lap, t2, t1, t0}, OperatorResidual::Method::kTermwise);
  return out;
}

OperatorResidual delta_es_residual(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                   double tol) {
  if (z.is_lattice_point()) throw SingularInputError("delta_es_residual: z must avoid lattice points");
  const int radius = eisenstein_continued_radius(s, w, z, tau, tol) + 3;
  const Jet e = eisenstein_continued_jet(s, w, z, tau, radius, false);
  const SeriesPoint p{tau, z, 1.0};
  const cplx lap = apply_to_jet(e, OperatorSpec::laplacian_z(), p);
  // (s - 1) E_{s-1}; for lattice w the pole -1/(s-1) is multiplied out.
  cplx lower;
  if (w.is_lattice_point()) {
    lower = (s - 1.0) * eisenstein_continued_regular(s - 1.0, w, z, tau, tol).value - 1.0;
  } else {
    lower = (s - 1.0) * eisenstein_continued(s - 1.0, w, z, tau, tol).value;
  }
  const cplx rhs = kTwoPi * lower;
  return make_residual(lap + rhs, {lap, rhs}, OperatorResidual::Method::kTermwise);
}

cplx laplace_green_e1(const TorusPoint& z, const UpperHalfPoint& tau, double tol) {
  if (z.is_lattice_point()) throw SingularInputError("laplace_green_e1: z must avoid lattice points");
  const int radius = eisenstein_continued_radius(1.0, {}, z, tau, tol) + 3;
  const Jet e = eisenstein_continued_jet(1.0, {}, z, tau, radius, false);
  return 0.25 * (e.d(Jet::kZ1, Jet::kZ1) + e.d(Jet::kZ2, Jet::kZ2));
}

std::vector<cplx> fourier_modes(const std::function<cplx(double)>& f, int count, int grid) {
  if (count < 0 || grid <= 2 * count) throw DomainError("fourier_modes: grid must exceed twice the mode count");
  std::vector<cplx> samples(grid);
  for (int j = 0; j < grid; ++j) samples[j] = f(static_cast<double>(j) / grid);
  std::vector<cplx> modes;
  modes.reserve(2 * count + 1);
  for (int n = -count; n <= count; ++n) {
    ComplexSum acc;
    for (int j = 0; j < grid; ++j) acc.add(samples[j] * std::exp(-kI * kTwoPi * (static_cast<double>(n) * j / grid)));
    modes.push_back(acc.value() / static_cast<double>(grid));
  }
  return modes;
}

Jet eisenstein_term_jet(cplx s, const SeriesPoint& p, int r, int l) {
  const Coords<Jet> c = make_jet_coords(p.tau, p.z.on(p.tau), p.mu);
  const Jet q = lattice_norm_ratio(c, r, l);
  return pow_any(q, -s) * (gamma(s) * std::pow(kPi, -s)) * exp_i(lattice_phase_angle(c, r, l));
}

}  // namespace mdf
