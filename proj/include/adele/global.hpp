#pragma once

// Global test functions on the adeles of Q, the theta lift, Euler-product
// evaluation on Re s > 1, analytic continuation by splitting the idele
// integral at height 1 (the delta / Poisson mechanism), residues, the
// functional equation, and completed L-functions for standard generators.
//
// The idele class group of Q is R_{>0} x Zhat^x; all global integrals reduce
// to the positive real ray against exact finite-place unit averages.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "adele/arch.hpp"
#include "adele/characters.hpp"
#include "adele/errors.hpp"
#include "adele/padic.hpp"

namespace adele {

// Restricted product: archimedean part plus finitely many exceptional
// p-adic components (every unlisted prime carries 1_{Z_p}).
class GlobalTestFunction {
 public:
  GlobalTestFunction(ArchTestFunction arch, std::map<std::int64_t, PAdicTestFunction> finite = {});

  static GlobalTestFunction standard();  // Gaussian x 1_{Zhat}
  // chi-twisted standard function: x^eps exp(-pi x^2) at infinity, the
  // unit-character function at each ramified prime (local factors 1 there).
  static GlobalTestFunction standard_for(const DirichletCharacter& chi);

  const ArchTestFunction& arch() const { return arch_; }
  const std::map<std::int64_t, PAdicTestFunction>& finite() const { return finite_; }

  // product of the finite components at the rational a/b (unlisted primes
  // contribute their 1_{Z_p} value); with the arch value this evaluates the
  // function at any adele point supported on Q x R
  cdouble finite_weight(std::int64_t a, std::int64_t b = 1) const;

  GlobalTestFunction with_finite(std::int64_t p, PAdicTestFunction f) const;
  GlobalTestFunction fourier() const;
  GlobalTestFunction reflect() const;
  GlobalTestFunction operator*(cdouble c) const;

  cdouble value_at_zero() const;  // adelic value at 0: arch(0) * prod_p f_p(0)
  // D = prod p^{M_p}: the support of the rational theta sum is (1/D) Z
  std::int64_t denominator() const;
  bool zhat_supported() const { return denominator() == 1; }

 private:
  ArchTestFunction arch_;
  std::map<std::int64_t, PAdicTestFunction> finite_;
};

// Height of an idele with the given finite exponent data (value p^{-e_p} at
// p) and archimedean coordinate: prod_v max(|g_v|_v, 1).  Always >= 1.
double height(const std::map<std::int64_t, int>& exponents, double arch);

// ---------------------------------------------------------------------------
// Theta machinery
// ---------------------------------------------------------------------------

struct ThetaLift {
  cdouble value;
  double truncation = 0.0;  // the sum ran over 0 < |q| <= truncation
  double tail_bound = 0.0;  // coarse bound on the dropped Gaussian mass
};

// Sums K(g) = sum_{q in Q^x} W(q) f_arch(q g) with exact finite-place
// weights W, over the support lattice (1/D) Z.  With a character, W(q) is
// the Zhat^x unit average of the finite part against omega_chi, so K is the
// automorphic kernel integrated over the compact part of the idele class
// group.  Weight tables are cached lazily: use one engine per thread.
class ThetaEngine {
 public:
  // chi = nullptr: raw weights W(q) = prod_p f_p(q)
  ThetaEngine(GlobalTestFunction f, const DirichletCharacter* chi, double term_cutoff = 1e-18);

  cdouble eval(double g) const;                 // automatic truncation
  ThetaLift eval_report(double g) const;        // value plus truncation data
  cdouble eval_truncated(double g, double T) const;  // |q| <= T only
  const GlobalTestFunction& function() const { return f_; }
  bool vanishes_identically() const { return dead_; }
  double weight_sup() const { return weight_sup_; }

 private:
  cdouble weight(std::int64_t k, int sign) const;  // W(sign * k / D)
  GlobalTestFunction f_;
  std::optional<DirichletCharacter> chi_;
  std::vector<LocalCharacter> locals_;  // aligned with f_.finite()
  double cutoff_;
  double weight_sup_ = 1.0;  // sup bound on |W|
  std::int64_t denom_ = 1;
  bool dead_ = false;  // character ramified at a place with standard component
  mutable std::vector<cdouble> wt_pos_, wt_neg_;  // cached weights, 1-based
};

// Construction L -> S': theta_lift(f, g) = sum_{q in Q^x} f(q g) as a
// function of the positive real scale g, truncated at |q| <= T (T <= 0
// selects the truncation from the Gaussian tail target 1e-16).  The finite
// part must be supported in Zhat; the continuation engine extends this
// internally to denominator supports for Fourier transforms.
cdouble theta_lift(const GlobalTestFunction& f, double g, double T = 0.0);
ThetaLift theta_lift_report(const GlobalTestFunction& f, double g, double T = 0.0);

// ---------------------------------------------------------------------------
// Zeta integrals
// ---------------------------------------------------------------------------

struct EulerOptions {
  bool tail_correction = true;  // Moebius / log-L acceleration of the p > P tail
  bool parallel = true;
};

struct EulerResult {
  cdouble value;
  double err_bound = 0.0;
};

// Product of local zeta integrals over p <= P times the archimedean factor.
// Requires Re s > 1.  With tail correction the p > P part of the unramified
// product is restored through the series route; the reported bound is then
// the correction's own residual.  Without it the bound is the classical
// majorant sum_{p>P} p^{-Re s}.
EulerResult zeta_euler(const GlobalTestFunction& f, const HeckeCharacterPoint& chi,
                       std::int64_t P, const EulerOptions& opts = {});

// Analytic continuation: I(f, chi, s) + I(Ff, chi^{-1}, 1-s) + polar term,
// where I integrates the theta kernel against g^s over scales >= 1 and the
// polar term [(Ff)(0)/(s-1) - f(0)/s] appears on the trivial component
// only.  Throws PoleError at s in {0, 1} on the trivial component.
cdouble zeta_continued(const GlobalTestFunction& f, const HeckeCharacterPoint& chi,
                       double quad_tol = 1e-12, double theta_cutoff = 1e-18);

struct PolarData {
  cdouble residue_at_1;          // (Ff)(0)
  cdouble residue_at_0;          // -f(0)
  cdouble value_at_zero;         // f(0)
  cdouble fourier_value_at_zero; // (Ff)(0)
};

// Exact polar data of the continued integral on the trivial component.
PolarData residues(const GlobalTestFunction& f);

// The same residues extracted numerically from (s-1) Lambda(s) and
// s Lambda(s) near the poles (Richardson-extrapolated two-point limits).
PolarData residues_numeric(const GlobalTestFunction& f);

// |Z(f, chi, s) - Z(Ff, conj(chi), 1-s)| through two independent
// continuation runs.
double functional_equation_check(const GlobalTestFunction& f, const HeckeCharacterPoint& chi);

// iota(f)(g) = g^{-1} f(g^{-1}) on functions of a positive real scale.
using ScaleFunction = std::function<cdouble(double)>;
ScaleFunction iota_involution(ScaleFunction f);

// ---------------------------------------------------------------------------
// Completed L-functions
// ---------------------------------------------------------------------------

struct EngineParams {
  double quad_tol = 1e-12;      // quadrature target for the continuation
  double theta_cutoff = 1e-18;  // theta truncation: per-term cutoff
  // series route for log|Lambda| needs the Dirichlet series; right of this
  // line it is used instead of the quadrature route (which bottoms out near
  // the double-precision noise floor for large |Im s|)
  double series_sigma = 1.5;
};

// Lambda(chi, s) = Gamma_R(s + eps) L(chi, s): the zeta integral of the
// chi-twisted standard test function.  This representative fixes the
// generator normalization; the classical conductor-power normalization is
// q^{(s+eps)/2} Lambda(chi, s).
class CompletedLFunction {
 public:
  explicit CompletedLFunction(DirichletCharacter chi, EngineParams params = {});

  const DirichletCharacter& character() const { return chi_; }
  int epsilon() const { return chi_.parity(); }
  GammaFactor gamma_factor() const;
  const GlobalTestFunction& test_function() const { return f_; }
  const EngineParams& params() const { return params_; }

  cdouble evaluate(cdouble s) const;           // Lambda(chi, s)
  cdouble evaluate_stripped(cdouble s) const;  // L(chi, s)
  double log_abs(cdouble s) const;             // region-dispatched log|Lambda|

  // polar data ((Ff)(0), -f(0)); zero on nontrivial components
  PolarData polar() const { return polar_; }

  // min |L(chi, sigma + it)| over the grid (gamma factor stripped; Lambda
  // and L have the same zeros and Gamma_R has none)
  double zero_free_min(double sigma, double t_max, double step) const;

 private:
  DirichletCharacter chi_;
  EngineParams params_;
  GlobalTestFunction f_;
  PolarData polar_;
};

CompletedLFunction standard_L(const DirichletCharacter& chi, EngineParams params = {});

}  // namespace adele
