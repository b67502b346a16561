#include "adele/arch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace adele {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9 coefficients (double precision)
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

bool at_nonpositive_integer(cdouble s) {
  if (s.imag() != 0.0) return false;
  const double r = std::round(s.real());
  return r <= 0.0 && std::abs(s.real() - r) == 0.0;
}

cdouble lanczos_sum(cdouble z) {
  // z with Re z >= 1/2, series in Gamma(z)
  cdouble a = kLanczos[0];
  for (int k = 1; k < 9; ++k) a += kLanczos[k] / (z + static_cast<double>(k - 1));
  return a;
}

// log|sin(pi z)|, stable for large |Im z|
double log_abs_sin_pi(cdouble z) {
  const double y = std::abs(z.imag());
  if (y < 1.0) return std::log(std::abs(std::sin(kPi * z)));
  const cdouble w = std::exp(cdouble(0.0, 2.0 * kPi) * cdouble(z.real(), y));
  return kPi * y - std::log(2.0) + std::log(std::abs(1.0 - w));
}

}  // namespace

cdouble gamma_fn(cdouble s) {
  if (at_nonpositive_integer(s)) {
    const long k = static_cast<long>(std::llround(-s.real()));
    double residue = 1.0;  // (-1)^k / k!
    for (long i = 1; i <= k; ++i) residue /= static_cast<double>(i);
    if (k % 2 == 1) residue = -residue;
    throw PoleError(s, residue, "gamma_fn: pole at s = -" + std::to_string(k));
  }
  if (s.real() < 0.5) {
    // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
    return kPi / (std::sin(kPi * s) * gamma_fn(1.0 - s));
  }
  const cdouble t = s + 6.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, s - 0.5) * std::exp(-t) * lanczos_sum(s);
}

cdouble log_gamma(cdouble s) {
  if (at_nonpositive_integer(s))
    throw PoleError(s, 0.0, "log_gamma: pole at non-positive integer");
  if (s.real() < 0.5) {
    // real part from the stable log|sin|; imaginary part only mod 2*pi
    const cdouble lg = log_gamma(1.0 - s);
    const double re = std::log(kPi) - log_abs_sin_pi(s) - lg.real();
    const double im = -std::arg(std::sin(kPi * s)) - lg.imag();
    return {re, im};
  }
  const cdouble t = s + 6.5;
  return 0.5 * std::log(2.0 * kPi) + (s - 0.5) * std::log(t) - t + std::log(lanczos_sum(s));
}

double log_abs_gamma(cdouble s) { return log_gamma(s).real(); }

cdouble gamma_R(cdouble s) { return std::pow(kPi, -s / 2.0) * gamma_fn(s / 2.0); }

cdouble gamma_C(cdouble s) { return 2.0 * std::pow(2.0 * kPi, -s) * gamma_fn(s); }

double log_abs_gamma_R(cdouble s) {
  return -0.5 * s.real() * std::log(kPi) + log_abs_gamma(s / 2.0);
}

double log_abs_gamma_C(cdouble s) {
  return std::log(2.0) - s.real() * std::log(2.0 * kPi) + log_abs_gamma(s);
}

double gamma_duplication_check(cdouble s) {
  // Gamma_R(s) Gamma_R(s+1) / Gamma_C(s)
  //   = pi^{-s-1/2} Gamma(s/2) Gamma((s+1)/2) / (2 (2 pi)^{-s} Gamma(s)),
  // evaluated through exp of a log sum so large |Im s| stays conditioned.
  const cdouble log_ratio = log_gamma(s / 2.0) + log_gamma((s + 1.0) / 2.0) - log_gamma(s) +
                            (-s - 0.5) * std::log(kPi) - std::log(2.0) + s * std::log(2.0 * kPi);
  return std::abs(std::exp(log_ratio) - 1.0);
}

cdouble GammaFactor::evaluate(cdouble s) const {
  switch (kind) {
    case Kind::real_even:
      return gamma_R(s + shift);
    case Kind::real_odd:
      return gamma_R(s + shift + 1.0);
    case Kind::complex_place:
      return gamma_C(s + shift);
  }
  return {};
}

double GammaFactor::log_abs(cdouble s) const {
  switch (kind) {
    case Kind::real_even:
      return log_abs_gamma_R(s + shift);
    case Kind::real_odd:
      return log_abs_gamma_R(s + shift + 1.0);
    case Kind::complex_place:
      return log_abs_gamma_C(s + shift);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// ArchTestFunction
// ---------------------------------------------------------------------------

ArchTestFunction::ArchTestFunction(std::vector<cdouble> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_ = {cdouble{0.0, 0.0}};
  if (degree() > kMaxDegree)
    throw std::length_error("ArchTestFunction: degree cap is 64");
}

ArchTestFunction ArchTestFunction::gaussian() { return ArchTestFunction({cdouble{1.0, 0.0}}); }

ArchTestFunction ArchTestFunction::monomial_gaussian(int m, cdouble c) {
  std::vector<cdouble> v(static_cast<std::size_t>(m) + 1, cdouble{0.0, 0.0});
  v.back() = c;
  return ArchTestFunction(std::move(v));
}

cdouble ArchTestFunction::value(double x) const {
  cdouble poly = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) poly = poly * x + c_[i];
  return poly * std::exp(-kPi * x * x);
}

ArchTestFunction ArchTestFunction::operator+(const ArchTestFunction& o) const {
  std::vector<cdouble> v(std::max(c_.size(), o.c_.size()), cdouble{0.0, 0.0});
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return ArchTestFunction(std::move(v));
}

ArchTestFunction ArchTestFunction::operator-(const ArchTestFunction& o) const {
  return *this + o * cdouble{-1.0, 0.0};
}

ArchTestFunction ArchTestFunction::operator*(cdouble k) const {
  std::vector<cdouble> v = c_;
  for (auto& x : v) x *= k;
  return ArchTestFunction(std::move(v));
}

ArchTestFunction ArchTestFunction::multiply_by_x() const {
  std::vector<cdouble> v(c_.size() + 1, cdouble{0.0, 0.0});
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + 1] = c_[i];
  return ArchTestFunction(std::move(v));
}

ArchTestFunction ArchTestFunction::derivative() const {
  // (x^m G)' = m x^{m-1} G - 2 pi x^{m+1} G
  std::vector<cdouble> v(c_.size() + 1, cdouble{0.0, 0.0});
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (m >= 1) v[m - 1] += static_cast<double>(m) * c_[m];
    v[m + 1] -= 2.0 * kPi * c_[m];
  }
  return ArchTestFunction(std::move(v));
}

ArchTestFunction ArchTestFunction::reflect() const {
  std::vector<cdouble> v = c_;
  for (std::size_t m = 1; m < v.size(); m += 2) v[m] = -v[m];
  return ArchTestFunction(std::move(v));
}

ArchTestFunction ArchTestFunction::fourier() const {
  // F[x^m G] by the recurrence h_0 = G, h_{m+1} = (i / 2 pi) h_m'
  const int D = degree();
  ArchTestFunction h = gaussian();
  ArchTestFunction acc = h * c_[0];
  const cdouble i_over_2pi{0.0, 1.0 / (2.0 * kPi)};
  for (int m = 1; m <= D; ++m) {
    h = h.derivative() * i_over_2pi;
    acc = acc + h * c_[static_cast<std::size_t>(m)];
  }
  return acc;
}

cdouble arch_zeta(const ArchTestFunction& f, int eps, cdouble s) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("arch_zeta: parity must be 0 or 1");
  cdouble sum = 0.0;
  for (int m = 0; m <= f.degree(); ++m) {
    const cdouble cm = f.coeffs()[static_cast<std::size_t>(m)];
    if (cm == cdouble{0.0, 0.0}) continue;
    if ((m + eps) % 2 != 0) continue;  // (1 + (-1)^{m+eps}) vanishes
    const cdouble w = (s + static_cast<double>(m)) / 2.0;
    if (at_nonpositive_integer(w)) {
      // residue in s of the full closed form at this pole; every term of the
      // same parity whose gamma argument is also a non-positive integer
      // contributes via Gamma(w) ~ (-1)^k / (k! (w + k)), w = (s+m)/2
      cdouble residue = 0.0;
      for (int mm = m; mm <= f.degree(); mm += 2) {
        const cdouble cmm = f.coeffs()[static_cast<std::size_t>(mm)];
        if (cmm == cdouble{0.0, 0.0}) continue;
        const cdouble ww = (s + static_cast<double>(mm)) / 2.0;
        if (!at_nonpositive_integer(ww)) continue;
        const long kk = static_cast<long>(std::llround(-ww.real()));
        double f2 = 1.0;
        for (long i = 1; i <= kk; ++i) f2 *= static_cast<double>(i);
        const double sign = (kk % 2 == 0) ? 1.0 : -1.0;
        residue += cmm * std::pow(kPi, -(s.real() + static_cast<double>(mm)) / 2.0) * 2.0 *
                   sign / f2;
      }
      throw PoleError(s, residue, "arch_zeta: pole of Gamma((s+m)/2) at m = " +
                                      std::to_string(m));
    }
    // (1 + (-1)^{m+eps}) * (1/2) = 1 on matching parity
    sum += cm * std::pow(kPi, -(s + static_cast<double>(m)) / 2.0) * gamma_fn(w);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Stirling profiling
// ---------------------------------------------------------------------------

StirlingProfile stirling_profile(double sigma, double t_max, double step) {
  if (t_max < 10.0) throw std::invalid_argument("stirling_profile: t_max must be >= 10");
  if (step <= 0.0) throw std::invalid_argument("stirling_profile: step must be positive");
  StirlingProfile out;
  out.sigma = sigma;

  // |Gamma_R(sigma+it)| ~ C |t|^{(sigma-1)/2} exp(-pi |t| / 4); fit C, then
  // fit the decay rate with the log-power term removed.
  std::vector<double> ts, data;
  for (double t = 10.0; t <= t_max + 1e-12; t += step) {
    ts.push_back(t);
    data.push_back(log_abs_gamma_R({sigma, t}));
  }
  const double power = (sigma - 1.0) / 2.0;

  double c_sum = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i)
    c_sum += data[i] - (power * std::log(ts[i]) - kPi / 4.0 * ts[i]);
  const double C = c_sum / static_cast<double>(ts.size());
  out.fitted_constant = C;

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double y = data[i] - power * std::log(ts[i]);
    sx += ts[i];
    sy += y;
    sxx += ts[i] * ts[i];
    sxy += ts[i] * y;
  }
  out.fitted_rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double model = power * std::log(ts[i]) - kPi / 4.0 * ts[i] + C;
    const double dev = data[i] - model;
    out.rows.push_back({ts[i], data[i], model, dev});
    out.max_deviation = std::max(out.max_deviation, std::abs(dev));
  }
  return out;
}

SampledVertical mellin_multiplier(const SampledVertical& h) {
  SampledVertical out;
  out.sigma = h.sigma;
  out.ts = h.ts;
  out.values.resize(h.values.size());
  for (std::size_t i = 0; i < h.ts.size(); ++i) {
    const cdouble s{h.sigma, h.ts[i]};
    if (at_nonpositive_integer(s / 2.0))
      throw PoleError(s, 0.0, "mellin_multiplier: grid hits a pole of Gamma_R");
    out.values[i] = h.values[i] * gamma_R(s);
  }
  return out;
}

}  // namespace adele
