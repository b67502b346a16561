#pragma once

// Numerical Mellin transforms on the log axis, Paley-Wiener semi-norm
// diagnostics on vertical lines, and vertical-strip growth reports for
// completed L-functions.

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "adele/arch.hpp"
#include "adele/global.hpp"

namespace adele {

struct MellinOptions {
  // count an even function on both halves of R^x (doubles the ray integral)
  bool double_even = false;
  // the window [log_lo, log_hi] is the function's exact support (indicator
  // classes); suppresses the edge-decay validation
  bool compact_window = false;
  // integration window on y = log x; the declared decay class must make the
  // integrand negligible outside it
  double log_lo = -34.0;
  double log_hi = 8.0;
  double tol = 1e-11;
};

// int_0^inf f(x) x^s dx/x (optionally doubled), by adaptive quadrature on
// the log axis.  Rejects inputs whose integrand has not decayed at the
// declared window edges.
cdouble mellin_numeric(const std::function<cdouble(double)>& f, cdouble s,
                       const MellinOptions& opts = {});

// Semi-norm estimate sup_t (1 + |t|^n) |fhat(sigma + i t)| over the sampled
// grid |t| <= t_max; a grid lower bound of the true sup, with a
// stabilization diagnostic (the same max over the half grid).
struct SeminormEstimate {
  double estimate = 0.0;
  double estimate_half = 0.0;  // over |t| <= t_max / 2
  double argmax_t = 0.0;
};

SeminormEstimate seminorm_profile(const std::function<cdouble(cdouble)>& fhat, double sigma,
                                  int n, double t_max, double step);

// Samples of a function on a vertical line together with grid semi-norm
// estimates for a configured list of n.
struct VerticalStripProfile {
  double sigma = 0.0;
  std::vector<double> ts;  // sorted
  std::vector<cdouble> values;
  std::map<int, double> seminorms;
};

VerticalStripProfile vertical_profile(const std::function<cdouble(cdouble)>& fhat, double sigma,
                                      double t_max, double step, const std::vector<int>& ns);

// Growth of log|Lambda(sigma + it)| on t in [10, t_max]: decay-rate fit
// with the Stirling log-power term held fixed, and the gamma-stripped
// polynomial-band check.
struct GrowthReport {
  double sigma = 0.0;
  std::vector<double> ts;
  std::vector<double> log_abs;      // log|Lambda|
  std::vector<double> gamma_only;   // log|Gamma_R(s + eps)|
  double fitted_rate = 0.0;         // target -pi/4
  double fitted_constant = 0.0;
  double ratio_log_min = 0.0;       // extremes of log(|Lambda| / |Gamma_R|)
  double ratio_log_max = 0.0;
  bool ratio_in_poly_band = false;  // |log ratio| <= 5 log t on the grid
};

GrowthReport growth_report(const CompletedLFunction& L, double sigma, double t_max,
                           double step = 0.25);

}  // namespace adele
