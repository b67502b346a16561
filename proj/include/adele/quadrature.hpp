#pragma once

// Complex-valued adaptive Gauss-Kronrod quadrature, backed by Boost.Math.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <complex>

namespace adele {

struct QuadratureResult {
  std::complex<double> value{};
  double error = 0.0;  // boost's error estimate
};

// Integrates f over [a, b] adaptively (GK15, depth-limited).  `tol` is the
// relative target passed to boost; the returned error is its estimate.
template <class F>
QuadratureResult integrate_gk(F&& f, double a, double b, double tol = 1e-12,
                              unsigned max_depth = 15) {
  QuadratureResult r;
  double err = 0.0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth,
                                                                          tol, &err);
  r.error = err;
  return r;
}

}  // namespace adele
