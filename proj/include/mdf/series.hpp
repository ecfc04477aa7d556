#pragma once

#include <memory>

#include "mdf/jet.hpp"
#include "mdf/types.hpp"

namespace mdf {

/// Evaluation point for (z; tau) families depending on a mass parameter.
struct SeriesPoint {
  UpperHalfPoint tau{0.0, 1.0};
  TorusPoint z{};
  double mu = 1.0;
};

/// A lattice sum that can be evaluated as a number and, term by term, as a jet in the real
/// coordinates (tau1, tau2, z1, z2, mu). The jet carries all partial derivatives up to order
/// three, which is what the differential operators consume.
class LatticeSeries {
 public:
  virtual ~LatticeSeries() = default;
  virtual EvalResult evaluate(const SeriesPoint& p, double tol) const = 0;
  virtual Jet evaluate_jet(const SeriesPoint& p, double tol) const = 0;
};

using SeriesPtr = std::shared_ptr<const LatticeSeries>;

/// E_s(w, z; tau) through the continued representation (mu is ignored).
/// With allow_lattice_z the evaluation point may sit on the lattice (pole terms are added).
SeriesPtr make_eisenstein_series(cplx s, const TorusPoint& w = {}, bool allow_lattice_z = false);

}  // namespace mdf
