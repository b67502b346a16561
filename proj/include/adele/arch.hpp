#pragma once

// Archimedean test functions (span of x^m exp(-pi x^2)), the closed-form
// real-place zeta integral, gamma factors, Fourier transform with kernel
// exp(-2 pi i x y), and Stirling-decay profiling of Gamma_R on vertical
// lines.

#include <complex>
#include <cstdint>
#include <vector>

#include "adele/errors.hpp"

namespace adele {

// Complex gamma function (Lanczos, reflection for Re s < 1/2).  Throws
// PoleError at non-positive integers.
cdouble gamma_fn(cdouble s);

// log Gamma with exact real part log|Gamma|; the imaginary part is only
// meaningful modulo 2*pi (sufficient for ratios through exp).
cdouble log_gamma(cdouble s);

double log_abs_gamma(cdouble s);

// Gamma_R(s) = pi^{-s/2} Gamma(s/2),  Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s)
cdouble gamma_R(cdouble s);
cdouble gamma_C(cdouble s);
double log_abs_gamma_R(cdouble s);
double log_abs_gamma_C(cdouble s);

// |Gamma_R(s) Gamma_R(s+1) - Gamma_C(s)| / |Gamma_C(s)|, evaluated in log
// space so large |Im s| stays well conditioned (Legendre duplication).
double gamma_duplication_check(cdouble s);

struct GammaFactor {
  enum class Kind { real_even, real_odd, complex_place };
  Kind kind = Kind::real_even;
  cdouble shift{0.0, 0.0};  // applied to s

  cdouble evaluate(cdouble s) const;
  double log_abs(cdouble s) const;
};

// Finite span of the basis x^m exp(-pi x^2), m = 0..degree; closed under
// differentiation, multiplication by x, and Fourier transform.
class ArchTestFunction {
 public:
  static constexpr int kMaxDegree = 64;  // documented cap

  explicit ArchTestFunction(std::vector<cdouble> coeffs);

  static ArchTestFunction gaussian();                                 // exp(-pi x^2)
  static ArchTestFunction monomial_gaussian(int m, cdouble c = 1.0);  // c x^m exp(-pi x^2)

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cdouble>& coeffs() const { return c_; }
  cdouble value(double x) const;
  cdouble value_at_zero() const { return c_[0]; }

  ArchTestFunction operator+(const ArchTestFunction& o) const;
  ArchTestFunction operator-(const ArchTestFunction& o) const;
  ArchTestFunction operator*(cdouble k) const;
  ArchTestFunction multiply_by_x() const;
  ArchTestFunction derivative() const;
  ArchTestFunction reflect() const;  // x -> f(-x)

  // Fourier transform, kernel exp(-2 pi i x y); exact within the basis.
  ArchTestFunction fourier() const;

 private:
  std::vector<cdouble> c_;
};

// Closed form of int_{R^x} f(x) sgn(x)^eps |x|^s d*x:
//   sum_m c_m (1 + (-1)^{m+eps}) (1/2) pi^{-(s+m)/2} Gamma((s+m)/2).
// Throws PoleError (with residue) at poles of contributing terms.
cdouble arch_zeta(const ArchTestFunction& f, int eps, cdouble s);

// One row per grid point t in [10, t_max]: data log|Gamma_R(sigma+it)|, the
// Stirling model ((sigma-1)/2) log t - (pi/4) t + C with C fitted, and the
// deviation.  fitted_rate is the least-squares slope in t after removing
// the log-power term.
struct StirlingProfile {
  struct Row {
    double t, log_abs, model, deviation;
  };
  double sigma = 0.0;
  std::vector<Row> rows;
  double fitted_constant = 0.0;
  double fitted_rate = 0.0;
  double max_deviation = 0.0;
};

StirlingProfile stirling_profile(double sigma, double t_max, double step);

// A function sampled on the vertical line Re s = sigma.
struct SampledVertical {
  double sigma = 0.0;
  std::vector<double> ts;
  std::vector<cdouble> values;
};

// Pointwise multiplication by Gamma_R(s) on a vertical grid: the Mellin
// action of the standard archimedean factor.  Note this multiplier does NOT
// preserve rapid-decay classes in vertical strips; Gamma_R dies like
// exp(-pi |t| / 4), which is exactly why the standard factor fails to be a
// growth-bounded generator.  Throws if the grid hits a pole of Gamma_R.
SampledVertical mellin_multiplier(const SampledVertical& h);

}  // namespace adele
