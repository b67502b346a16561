#include "adele/global.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "adele/dirichlet_series.hpp"
#include "adele/parallel.hpp"
#include "adele/primes.hpp"
#include "adele/quadrature.hpp"

namespace adele {

namespace {
constexpr double kPi = std::numbers::pi;
}

// ---------------------------------------------------------------------------
// GlobalTestFunction
// ---------------------------------------------------------------------------

GlobalTestFunction::GlobalTestFunction(ArchTestFunction arch,
                                       std::map<std::int64_t, PAdicTestFunction> finite)
    : arch_(std::move(arch)) {
  for (auto& [p, f] : finite) {
    if (f.prime() != p)
      throw std::invalid_argument("GlobalTestFunction: map key does not match component prime");
    PAdicTestFunction g = f.canonicalized(0.0);
    if (g.is_standard()) continue;  // restricted product: standard entries are implicit
    finite_.emplace(p, std::move(g));
  }
}

GlobalTestFunction GlobalTestFunction::standard() {
  return GlobalTestFunction(ArchTestFunction::gaussian());
}

GlobalTestFunction GlobalTestFunction::standard_for(const DirichletCharacter& chi) {
  const DirichletCharacter prim = chi.is_primitive() ? chi : chi.primitive_part();
  std::map<std::int64_t, PAdicTestFunction> finite;
  for (const auto& [p, a] : prim.group().factorization) {
    (void)a;
    finite.emplace(p, PAdicTestFunction::from_unit_character(primary_factor(prim, p), p));
  }
  return GlobalTestFunction(ArchTestFunction::monomial_gaussian(prim.parity()),
                            std::move(finite));
}

GlobalTestFunction GlobalTestFunction::with_finite(std::int64_t p, PAdicTestFunction f) const {
  std::map<std::int64_t, PAdicTestFunction> m = finite_;
  m.erase(p);
  m.emplace(p, std::move(f));
  return GlobalTestFunction(arch_, std::move(m));
}

GlobalTestFunction GlobalTestFunction::fourier() const {
  std::map<std::int64_t, PAdicTestFunction> m;
  for (const auto& [p, f] : finite_) m.emplace(p, local_fourier(f));
  return GlobalTestFunction(arch_.fourier(), std::move(m));
}

GlobalTestFunction GlobalTestFunction::reflect() const {
  std::map<std::int64_t, PAdicTestFunction> m;
  for (const auto& [p, f] : finite_) m.emplace(p, f.reflect());
  return GlobalTestFunction(arch_.reflect(), std::move(m));
}

GlobalTestFunction GlobalTestFunction::operator*(cdouble c) const {
  return GlobalTestFunction(arch_ * c, finite_);
}

cdouble GlobalTestFunction::value_at_zero() const {
  cdouble v = arch_.value_at_zero();
  for (const auto& [p, f] : finite_) {
    (void)p;
    v *= f.value_at_zero();
  }
  return v;
}

cdouble GlobalTestFunction::finite_weight(std::int64_t a, std::int64_t b) const {
  if (b == 0) throw std::invalid_argument("finite_weight: zero denominator");
  cdouble w{1.0, 0.0};
  for (const auto& [p, f] : finite_) {
    (void)p;
    w *= f.value_at_rational(a, b);
    if (w == cdouble{0.0, 0.0}) return w;
  }
  if (a == 0) return w;  // 0 lies in every Z_p
  // implicit 1_{Z_p} factors vanish when an unlisted prime divides the
  // reduced denominator
  std::int64_t bb = b / gcd64(a, b);
  if (bb < 0) bb = -bb;
  for (const auto& [p, f] : finite_) {
    (void)f;
    while (bb % p == 0) bb /= p;
  }
  return bb > 1 ? cdouble{0.0, 0.0} : w;
}

std::int64_t GlobalTestFunction::denominator() const {
  std::int64_t d = 1;
  for (const auto& [p, f] : finite_)
    for (int i = 0; i < f.outer_exp(); ++i) d *= p;
  return d;
}

double height(const std::map<std::int64_t, int>& exponents, double arch) {
  double h = std::max(std::abs(arch), 1.0);
  for (const auto& [p, e] : exponents)
    h *= std::max(std::pow(static_cast<double>(p), -static_cast<double>(e)), 1.0);
  return h;
}

// ---------------------------------------------------------------------------
// ThetaEngine
// ---------------------------------------------------------------------------

ThetaEngine::ThetaEngine(GlobalTestFunction f, const DirichletCharacter* chi, double term_cutoff)
    : f_(std::move(f)), cutoff_(term_cutoff) {
  if (chi != nullptr) chi_ = chi->is_primitive() ? *chi : chi->primitive_part();
  denom_ = f_.denominator();

  if (chi_) {
    for (const auto& [p, comp] : f_.finite()) {
      (void)comp;
      locals_.push_back(LocalCharacter::from(*chi_, p));
    }
    // a ramified place with the implicit standard component kills the
    // compact-part average outright
    for (const auto& [p, a] : chi_->group().factorization) {
      (void)a;
      if (!f_.finite().count(p)) dead_ = true;
    }
  }

  weight_sup_ = 1.0;
  for (const auto& [p, comp] : f_.finite()) {
    (void)p;
    double mx = 0.0;
    for (const auto& v : comp.values()) mx = std::max(mx, std::abs(v));
    weight_sup_ *= mx;
  }
}

cdouble ThetaEngine::weight(std::int64_t k, int sign) const {
  auto& cache = sign > 0 ? wt_pos_ : wt_neg_;
  const std::size_t idx = static_cast<std::size_t>(k - 1);
  while (cache.size() <= idx) {
    const std::int64_t kk = static_cast<std::int64_t>(cache.size()) + 1;
    const std::int64_t a = sign > 0 ? kk : -kk;
    cdouble w{1.0, 0.0};
    std::size_t i = 0;
    for (const auto& [p, comp] : f_.finite()) {
      (void)p;
      if (chi_) {
        const LocalCharacter& lc = locals_[i];
        w *= comp.unit_average_scaled(a, denom_, lc.ramified ? &lc.unit_char : nullptr);
      } else {
        w *= comp.value_at_rational(a, denom_);
      }
      if (w == cdouble{0.0, 0.0}) break;
      ++i;
    }
    cache.push_back(w);
  }
  return cache[idx];
}

cdouble ThetaEngine::eval(double g) const { return eval_report(g).value; }

ThetaLift ThetaEngine::eval_report(double g) const {
  if (dead_ || g <= 0.0) return {cdouble{0.0, 0.0}, 0.0, 0.0};
  const double scale = g / static_cast<double>(denom_);
  const int deg = f_.arch().degree();
  double sum_abs = 0.0;
  for (const auto& c : f_.arch().coeffs()) sum_abs += std::abs(c);
  const double x_peak = std::sqrt(static_cast<double>(deg) / (2.0 * kPi)) + 1.0;

  ThetaLift out;
  cdouble acc = 0.0;
  std::int64_t k = 1;
  double bound = 0.0;
  for (;; ++k) {
    const double x = static_cast<double>(k) * scale;
    bound = weight_sup_ * sum_abs * std::pow(std::max(x, 1.0), deg) * std::exp(-kPi * x * x);
    if (x >= x_peak && bound < cutoff_) break;
    acc += weight(k, +1) * f_.arch().value(x) + weight(k, -1) * f_.arch().value(-x);
    if (k > 20'000'000) throw std::length_error("ThetaEngine: truncation did not converge");
  }
  out.value = acc;
  out.truncation = static_cast<double>(k - 1) / static_cast<double>(denom_);
  // dropped terms fall at least geometrically past the Gaussian peak
  out.tail_bound = 2.0 * bound * std::max(1.0, 1.0 / (kPi * std::max(scale, 1e-9)));
  return out;
}

cdouble ThetaEngine::eval_truncated(double g, double T) const {
  if (dead_ || g <= 0.0) return 0.0;
  const double scale = g / static_cast<double>(denom_);
  const std::int64_t kmax =
      static_cast<std::int64_t>(std::floor(T * static_cast<double>(denom_) + 1e-9));
  cdouble acc = 0.0;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const double x = static_cast<double>(k) * scale;
    acc += weight(k, +1) * f_.arch().value(x) + weight(k, -1) * f_.arch().value(-x);
  }
  return acc;
}

ThetaLift theta_lift_report(const GlobalTestFunction& f, double g, double T) {
  if (!f.zhat_supported())
    throw std::invalid_argument(
        "theta_lift: finite part is not supported in Zhat (some component reaches p^{-M} with "
        "M > 0); the lattice of rational points would have denominator " +
        std::to_string(f.denominator()));
  if (g <= 0.0) throw std::invalid_argument("theta_lift: scale must be positive");
  const ThetaEngine engine(f, nullptr);
  if (T <= 0.0) return engine.eval_report(g);
  ThetaLift out;
  out.value = engine.eval_truncated(g, T);
  out.truncation = T;
  double sum_abs = 0.0;
  for (const auto& c : f.arch().coeffs()) sum_abs += std::abs(c);
  const double x = (std::floor(T) + 1.0) * g;
  out.tail_bound = 2.0 * engine.weight_sup() * sum_abs *
                   std::pow(std::max(x, 1.0), f.arch().degree()) * std::exp(-kPi * x * x) *
                   std::max(1.0, 1.0 / (kPi * g));
  return out;
}

cdouble theta_lift(const GlobalTestFunction& f, double g, double T) {
  return theta_lift_report(f, g, T).value;
}

// ---------------------------------------------------------------------------
// Continuation
// ---------------------------------------------------------------------------

namespace {

// upper integration limit for int_1^inf K(g) g^s d*g at the engine's
// cutoff: beyond it the integrand is below ~1e-20
double log_cut(const ThetaEngine& engine, double sigma) {
  const GlobalTestFunction& f = engine.function();
  const std::int64_t denom = f.denominator();
  const int deg = f.arch().degree();
  double sum_abs = 0.0;
  for (const auto& c : f.arch().coeffs()) sum_abs += std::abs(c);
  double x = std::sqrt(static_cast<double>(deg) / (2.0 * kPi)) + 1.5;
  for (; x < 400.0; x += 0.25) {
    const double g = static_cast<double>(denom) * x;
    const double lb = std::log(2.0 * engine.weight_sup() * sum_abs + 1e-300) +
                      deg * std::log(std::max(x, 1.0)) - kPi * x * x +
                      std::max(sigma, 0.0) * std::log(std::max(g, 1.0));
    if (lb < std::log(1e-21)) break;
  }
  return std::max(std::log(static_cast<double>(denom) * x), 0.75);
}

cdouble half_integral(const ThetaEngine& engine, cdouble s, double quad_tol) {
  if (engine.vanishes_identically()) return 0.0;
  const double ymax = log_cut(engine, s.real());
  auto integrand = [&](double y) { return engine.eval(std::exp(y)) * std::exp(s * y); };
  return integrate_gk(integrand, 0.0, ymax, quad_tol).value;
}

bool trivial_component(const DirichletCharacter& chi) { return chi.modulus() == 1; }

}  // namespace

cdouble zeta_continued(const GlobalTestFunction& f, const HeckeCharacterPoint& chi,
                       double quad_tol, double theta_cutoff) {
  const cdouble s = chi.s;
  const GlobalTestFunction Ff = f.fourier();

  if (trivial_component(chi.finite)) {
    if (std::abs(s) < 1e-12)
      throw PoleError(0.0, -f.value_at_zero(), "zeta_continued: pole at s = 0");
    if (std::abs(s - 1.0) < 1e-12)
      throw PoleError(1.0, Ff.value_at_zero(), "zeta_continued: pole at s = 1");
  }

  const DirichletCharacter chi_inv = chi.finite.conjugate();
  const ThetaEngine e1(f, &chi.finite, theta_cutoff);
  const ThetaEngine e2(Ff, &chi_inv, theta_cutoff);
  cdouble out = half_integral(e1, s, quad_tol) + half_integral(e2, 1.0 - s, quad_tol);
  if (trivial_component(chi.finite))
    out += Ff.value_at_zero() / (s - 1.0) - f.value_at_zero() / s;
  return out;
}

EulerResult zeta_euler(const GlobalTestFunction& f, const HeckeCharacterPoint& chi,
                       std::int64_t P, const EulerOptions& opts) {
  const cdouble s = chi.s;
  const double sigma = s.real();
  if (sigma <= 1.0)
    throw ConvergenceError(1.0, "zeta_euler: the unramified product needs Re s > 1");
  if (P < 2) throw std::invalid_argument("zeta_euler: prime cutoff must be >= 2");

  cdouble value = arch_zeta(f.arch(), chi.epsilon(), s);

  // exceptional places and ramified places get their exact local integral
  std::vector<std::int64_t> special;
  for (const auto& [p, comp] : f.finite()) {
    (void)comp;
    special.push_back(p);
  }
  for (const auto& [p, a] : chi.finite.group().factorization) {
    (void)a;
    if (!f.finite().count(p)) special.push_back(p);
  }
  std::sort(special.begin(), special.end());
  special.erase(std::unique(special.begin(), special.end()), special.end());
  if (!special.empty() && special.back() > P)
    throw std::invalid_argument("zeta_euler: prime cutoff below an exceptional place");

  for (const std::int64_t p : special) {
    const auto it = f.finite().find(p);
    const PAdicTestFunction comp =
        it != f.finite().end() ? it->second : PAdicTestFunction::indicator_zp(p);
    value *= local_zeta(comp, chi);
  }

  // unramified standard factors (1 - chi(p) p^{-s})^{-1}, p <= P
  const auto primes = primes_up_to(P);
  std::vector<std::int64_t> ps;
  ps.reserve(primes.size());
  for (const std::int64_t p : primes)
    if (!std::binary_search(special.begin(), special.end(), p)) ps.push_back(p);

  std::vector<cdouble> factors;
  exec::fill_indexed(
      factors, ps.size(),
      [&](std::size_t i) {
        const std::int64_t p = ps[i];
        const cdouble z =
            chi.finite(p) * std::exp(-s * std::log(static_cast<double>(p)));
        return 1.0 / (1.0 - z);
      },
      opts.parallel);
  for (const cdouble& c : factors) value *= c;

  const double majorant =
      std::pow(static_cast<double>(P), 1.0 - sigma) / (sigma - 1.0);
  double err;
  if (opts.tail_correction) {
    value *= std::exp(euler_log_tail(chi.finite, s, primes));
    // the Moebius / log-L route truncates below 1e-19 tail mass; roundoff
    // across the product dominates
    err = std::abs(value) * (1e-13 + std::pow(static_cast<double>(P), 1.0 - 2.0 * sigma));
  } else {
    err = std::abs(value) * (std::exp(majorant) - 1.0);
  }
  return {value, err};
}

// ---------------------------------------------------------------------------
// Residues, functional equation, iota
// ---------------------------------------------------------------------------

PolarData residues(const GlobalTestFunction& f) {
  const cdouble f0 = f.value_at_zero();
  const cdouble Ff0 = f.fourier().value_at_zero();
  return {Ff0, -f0, f0, Ff0};
}

PolarData residues_numeric(const GlobalTestFunction& f) {
  const DirichletCharacter triv = DirichletCharacter::principal(1);
  auto lam = [&](cdouble s) { return zeta_continued(f, {triv, s}); };
  const double h = 1e-4;
  // two-point Richardson limits of (s-1) Lambda(s) at 1 and s Lambda(s) at 0
  const cdouble r1h = h * lam(1.0 + h);
  const cdouble r1h2 = (h / 2.0) * lam(1.0 + h / 2.0);
  const cdouble r0h = h * lam(cdouble(h, 0.0));
  const cdouble r0h2 = (h / 2.0) * lam(cdouble(h / 2.0, 0.0));
  PolarData d = residues(f);
  d.residue_at_1 = 2.0 * r1h2 - r1h;
  d.residue_at_0 = 2.0 * r0h2 - r0h;
  return d;
}

double functional_equation_check(const GlobalTestFunction& f, const HeckeCharacterPoint& chi) {
  const cdouble lhs = zeta_continued(f, chi);
  const HeckeCharacterPoint dual(chi.finite.conjugate(), 1.0 - chi.s);
  const cdouble rhs = zeta_continued(f.fourier(), dual);
  return std::abs(lhs - rhs);
}

ScaleFunction iota_involution(ScaleFunction f) {
  return [f = std::move(f)](double g) -> cdouble {
    if (g <= 0.0) throw std::invalid_argument("iota: scale must be positive");
    return f(1.0 / g) / g;
  };
}

// ---------------------------------------------------------------------------
// CompletedLFunction
// ---------------------------------------------------------------------------

CompletedLFunction::CompletedLFunction(DirichletCharacter chi, EngineParams params)
    : chi_(chi.is_primitive() ? std::move(chi) : chi.primitive_part()),
      params_(params),
      f_(GlobalTestFunction::standard_for(chi_)) {
  if (chi_.modulus() == 1) {
    polar_ = residues(f_);
  } else {
    const cdouble f0 = f_.value_at_zero();
    polar_ = {0.0, 0.0, f0, f_.fourier().value_at_zero()};
  }
}

GammaFactor CompletedLFunction::gamma_factor() const {
  return {epsilon() == 0 ? GammaFactor::Kind::real_even : GammaFactor::Kind::real_odd,
          cdouble{0.0, 0.0}};
}

cdouble CompletedLFunction::evaluate(cdouble s) const {
  return zeta_continued(f_, {chi_, s}, params_.quad_tol, params_.theta_cutoff);
}

cdouble CompletedLFunction::evaluate_stripped(cdouble s) const {
  if (s.real() >= params_.series_sigma) return dirichlet_L(chi_, s);
  return evaluate(s) / gamma_factor().evaluate(s);
}

double CompletedLFunction::log_abs(cdouble s) const {
  if (s.real() >= params_.series_sigma)
    return gamma_factor().log_abs(s) + std::log(std::abs(dirichlet_L(chi_, s)));
  return std::log(std::abs(evaluate(s)));
}

double CompletedLFunction::zero_free_min(double sigma, double t_max, double step) const {
  if (sigma <= 1.0)
    throw std::invalid_argument("zero_free_min: the sampled guarantee lives in Re s > 1");
  std::vector<double> ts;
  for (double t = -t_max; t <= t_max + 1e-12; t += step) ts.push_back(t);
  std::vector<double> mods;
  exec::fill_indexed(mods, ts.size(), [&](std::size_t i) {
    return std::abs(evaluate_stripped({sigma, ts[i]}));
  });
  double mn = mods.empty() ? 0.0 : mods[0];
  for (const double m : mods) mn = std::min(mn, m);
  return mn;
}

CompletedLFunction standard_L(const DirichletCharacter& chi, EngineParams params) {
  return CompletedLFunction(chi, params);
}

}  // namespace adele
