#pragma once

#include <array>
#include <complex>

#include "mdf/jet.hpp"

namespace mdf {

// Helpers that let term formulas be written once and evaluated either on plain
// complex numbers or on jets. A univariate function is passed as a callable
// f(x0, order) returning {f, f', f'', f'''} at x0 (entries above `order` unused).

template <class F>
std::complex<double> lift(std::complex<double> x, const F& f) {
  return f(x, 0)[0];
}

template <class F>
Jet lift(const Jet& x, const F& f) {
  return Jet::compose(x, f(x.value(), Jet::kOrder));
}

inline std::complex<double> value_of(std::complex<double> x) { return x; }
inline std::complex<double> value_of(const Jet& x) { return x.value(); }

}  // namespace mdf
