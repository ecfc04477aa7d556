#pragma once

#include <array>
#include <functional>
#include <vector>

#include "mdf/jet.hpp"
#include "mdf/massive.hpp"
#include "mdf/series.hpp"
#include "mdf/types.hpp"

namespace mdf {

/// Differential operator on functions of (z, tau, mu).
struct OperatorSpec {
  enum class Kind { kLaplacianTau, kLaplacianZ, kCasimir };
  Kind kind = Kind::kLaplacianTau;
  double k = 0.0;      // weight
  double m = 0.0;      // index
  double alpha = 0.0;  // characteristic of z, enters the index term of the z-Laplacian

  /// Throws UnsupportedError for the z-Laplacian or Casimir at nonzero weight or index.
  void validate() const;

  static OperatorSpec laplacian_tau(double k = 0.0) { return {Kind::kLaplacianTau, k, 0.0, 0.0}; }
  static OperatorSpec laplacian_z() { return {Kind::kLaplacianZ, 0.0, 0.0, 0.0}; }
  static OperatorSpec casimir() { return {Kind::kCasimir, 0.0, 0.0, 0.0}; }
};

/// Central-difference steps for (tau1, tau2, z1, z2, mu).
struct StencilSpec {
  std::array<double, Jet::kVars> steps{};

  /// h = scale * min(tau2, distance from z to the lattice) for tau and z, and scale * mu for mu,
  /// each rounded to the nearest power of two.
  /// The distance only matters for operators that differentiate in z.
  static StencilSpec standard(const SeriesPoint& p, const OperatorSpec& op, double scale = 1e-3);
  /// Throws StencilError unless every step used by `op` is positive and below min(tau2, distance)/100.
  void validate(const SeriesPoint& p, const OperatorSpec& op) const;
};

struct OperatorResidual {
  enum class Method { kTermwise, kFiniteDifference };
  cplx residual{};
  double reference = 0.0;
  Method method = Method::kTermwise;

  /// |residual| / max(reference, 1)
  double relative() const;
};

/// Partial derivative by multi-index over (tau1, tau2, z1, z2, mu); either read off a jet or
/// approximated by differences.
using PartialProvider = std::function<cplx(const Jet::MultiIndex&)>;

/// The operator assembled from partial derivatives at a point with the given tau2 and z2.
cplx apply_partials(const PartialProvider& d, const OperatorSpec& op, double tau2, double z2);

/// The two Casimir pieces -4 tau2 z2 (dz dzb^2 + dz^2 dzb) and -4 tau2^2 (dtaub dz^2 + dtau dzb^2).
struct CasimirParts {
  cplx first{};
  cplx second{};
};
CasimirParts casimir_parts(const PartialProvider& d, double tau2, double z2);
CasimirParts casimir_parts(const Jet& f, const SeriesPoint& p);

/// Operator applied to a jet expanded at p.
cplx apply_to_jet(const Jet& f, const OperatorSpec& op, const SeriesPoint& p);

/// Operator applied to a lattice series term by term (the sum of differentiated summands).
cplx apply_termwise(const LatticeSeries& series, const OperatorSpec& op, const SeriesPoint& p, double tol = 1e-12);

/// Evaluator of a function of (z, tau, mu). Finite differences move tau at fixed complex z.
using PointFunction = std::function<cplx(const SeriesPoint&)>;

/// Operator applied by second-order central differences.
cplx apply_fd(const PointFunction& f, const OperatorSpec& op, const SeriesPoint& p, const StencilSpec& stencil);
/// Same with the standard stencil for p.
cplx apply_fd(const PointFunction& f, const OperatorSpec& op, const SeriesPoint& p);

/// Delta_{tau,k} f - (g2 d^2/dmu^2 + g1 d/dmu + g0) f at p, from term-wise derivatives.
OperatorResidual residual_maass(const LatticeSeries& f, const CoefficientTriple& g, const SeriesPoint& p,
                                double k = 0.0, double tol = 1e-12);
/// The same with every derivative taken by finite differences.
OperatorResidual residual_maass_fd(const PointFunction& f, const CoefficientTriple& g, const SeriesPoint& p,
                                   double k = 0.0);

/// Residuals of C_{0,0} phi - lambda phi and Delta_{z,0,0} phi + (G2 d^2 + G1 d + G0) phi.
struct JacobiResiduals {
  OperatorResidual casimir;
  OperatorResidual laplacian;
};
JacobiResiduals residual_jacobi(const LatticeSeries& phi, const CoefficientTriple& g, cplx lambda, const SeriesPoint& p,
                                double tol = 1e-12);

/// Delta_{z,0,0} E_s(w, z; tau) + 2 pi (s - 1) E_{s-1}(w, z; tau); z must avoid the lattice.
OperatorResidual delta_es_residual(cplx s, const TorusPoint& w, const TorusPoint& z, const UpperHalfPoint& tau,
                                   double tol = 1e-13);

/// d_z d_zbar E_1(0, z; tau) from term-wise derivatives; equals pi / tau2 away from the lattice.
cplx laplace_green_e1(const TorusPoint& z, const UpperHalfPoint& tau, double tol = 1e-13);

/// Fourier coefficients c_n, n = -count..count, of a 1-periodic function of tau1 by the trapezoid
/// rule on `grid` equispaced nodes (grid > 2 count).
std::vector<cplx> fourier_modes(const std::function<cplx(double)>& f, int count, int grid = 64);

/// Summand Gamma(s) (tau2/pi)^s e^{2 pi i (r beta - l alpha)} / |r tau + l|^{2s} of E_s(0, z; tau) as a jet.
Jet eisenstein_term_jet(cplx s, const SeriesPoint& p, int r, int l);

}  // namespace mdf
