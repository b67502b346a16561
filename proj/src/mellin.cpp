#include "adele/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "adele/parallel.hpp"
#include "adele/quadrature.hpp"

namespace adele {

namespace {
constexpr double kPi = std::numbers::pi;
}

cdouble mellin_numeric(const std::function<cdouble(double)>& f, cdouble s,
                       const MellinOptions& opts) {
  auto integrand = [&](double y) { return f(std::exp(y)) * std::exp(s * y); };
  if (!opts.compact_window) {
    // declared decay class must hold at the window edges
    const double edge =
        std::max(std::abs(integrand(opts.log_lo)), std::abs(integrand(opts.log_hi)));
    if (!(edge < 1e-9))
      throw std::domain_error(
          "mellin_numeric: integrand has not decayed at the declared log-axis window edges");
  }
  const cdouble v = integrate_gk(integrand, opts.log_lo, opts.log_hi, opts.tol).value;
  return opts.double_even ? 2.0 * v : v;
}

SeminormEstimate seminorm_profile(const std::function<cdouble(cdouble)>& fhat, double sigma,
                                  int n, double t_max, double step) {
  if (n < 0) throw std::invalid_argument("seminorm_profile: n must be >= 0");
  if (step <= 0.0 || t_max <= 0.0)
    throw std::invalid_argument("seminorm_profile: bad grid");
  std::vector<double> ts;
  for (double t = -t_max; t <= t_max + 1e-12; t += step) ts.push_back(t);
  std::vector<double> vals;
  exec::fill_indexed(vals, ts.size(), [&](std::size_t i) {
    const double t = ts[i];
    return (1.0 + std::pow(std::abs(t), n)) * std::abs(fhat({sigma, t}));
  });
  SeminormEstimate out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (vals[i] > out.estimate) {
      out.estimate = vals[i];
      out.argmax_t = ts[i];
    }
    if (std::abs(ts[i]) <= t_max / 2.0) out.estimate_half = std::max(out.estimate_half, vals[i]);
  }
  return out;
}

VerticalStripProfile vertical_profile(const std::function<cdouble(cdouble)>& fhat, double sigma,
                                      double t_max, double step, const std::vector<int>& ns) {
  VerticalStripProfile out;
  out.sigma = sigma;
  for (double t = -t_max; t <= t_max + 1e-12; t += step) out.ts.push_back(t);
  exec::fill_indexed(out.values, out.ts.size(),
                     [&](std::size_t i) { return fhat({sigma, out.ts[i]}); });
  for (const int n : ns) {
    double est = 0.0;
    for (std::size_t i = 0; i < out.ts.size(); ++i)
      est = std::max(est,
                     (1.0 + std::pow(std::abs(out.ts[i]), n)) * std::abs(out.values[i]));
    out.seminorms[n] = est;
  }
  return out;
}

GrowthReport growth_report(const CompletedLFunction& L, double sigma, double t_max,
                           double step) {
  if (t_max < 12.0) throw std::invalid_argument("growth_report: t_max too small to fit a rate");
  GrowthReport out;
  out.sigma = sigma;
  for (double t = 10.0; t <= t_max + 1e-12; t += step) out.ts.push_back(t);

  exec::fill_indexed(out.log_abs, out.ts.size(),
                     [&](std::size_t i) { return L.log_abs({sigma, out.ts[i]}); });
  const GammaFactor gf = L.gamma_factor();
  exec::fill_indexed(out.gamma_only, out.ts.size(),
                     [&](std::size_t i) { return gf.log_abs({sigma, out.ts[i]}); });

  // fit log|Lambda| ~ rate * t + power * log t + const, power held at the
  // Stirling value for Gamma_R(s + eps)
  const double power = (sigma + static_cast<double>(L.epsilon()) - 1.0) / 2.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(out.ts.size());
  for (std::size_t i = 0; i < out.ts.size(); ++i) {
    const double y = out.log_abs[i] - power * std::log(out.ts[i]);
    sx += out.ts[i];
    sy += y;
    sxx += out.ts[i] * out.ts[i];
    sxy += out.ts[i] * y;
  }
  out.fitted_rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  out.fitted_constant = (sy - out.fitted_rate * sx) / n;

  out.ratio_log_min = out.ratio_log_max = out.log_abs[0] - out.gamma_only[0];
  out.ratio_in_poly_band = true;
  for (std::size_t i = 0; i < out.ts.size(); ++i) {
    const double r = out.log_abs[i] - out.gamma_only[i];
    out.ratio_log_min = std::min(out.ratio_log_min, r);
    out.ratio_log_max = std::max(out.ratio_log_max, r);
    if (std::abs(r) > 5.0 * std::log(out.ts[i])) out.ratio_in_poly_band = false;
  }
  return out;
}

}  // namespace adele
