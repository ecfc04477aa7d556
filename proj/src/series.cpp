#include "mdf/series.hpp"

#include "mdf/classical.hpp"

namespace mdf {
namespace {

// Extra shells summed for jets: derivatives carry polynomial factors in |lambda| that the value
// majorant does not see, and a few more exponentially small shells absorb them.
constexpr int kJetMarginShells = 3;

class EisensteinSeries final : public LatticeSeries {
 public:
  EisensteinSeries(cplx s, const TorusPoint& w, bool allow_lattice_z) : s_(s), w_(w), allow_(allow_lattice_z) {}

  EvalResult evaluate(const SeriesPoint& p, double tol) const override {
    EisensteinOptions opt;
    opt.allow_lattice_points = allow_;
    return eisenstein_continued(s_, w_, p.z, p.tau, tol, opt);
  }

  Jet evaluate_jet(const SeriesPoint& p, double tol) const override {
    const int radius = eisenstein_continued_radius(s_, w_, p.z, p.tau, tol) + kJetMarginShells;
    return eisenstein_continued_jet(s_, w_, p.z, p.tau, radius, allow_);
  }

 private:
  cplx s_;
  TorusPoint w_;
  bool allow_;
};

}  // namespace

SeriesPtr make_eisenstein_series(cplx s, const TorusPoint& w, bool allow_lattice_z) {
  return std::make_shared<EisensteinSeries>(s, w, allow_lattice_z);
}

}  // namespace mdf
