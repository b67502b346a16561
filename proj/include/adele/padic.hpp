#pragma once

// Exact finite-quotient model of Bruhat-Schwartz functions on Q_p, local
// zeta integrals, the local Fourier transform, and the generator map
// (convolution with the 0/delta_1/1 distribution).
//
// Measure normalizations, fixed throughout:
//   additive:        vol(Z_p) = 1
//   multiplicative:  vol(Z_p^x) = 1
// so d*x = (1 - 1/p)^{-1} dx/|x|_p shell by shell.  The additive character
// is psi(x) = exp(2*pi*i*{x}_p), of conductor Z_p.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "adele/characters.hpp"
#include "adele/errors.hpp"

namespace adele {

// Local component at p of the Hecke character attached to a primitive
// Dirichlet character chi:
//   omega_p(p) = at_p   (chi(p) when p is prime to the conductor, else the
//                        complementary factor evaluated at p),
//   omega_p(u) = unit_char(u)^{-1}  on units.
struct LocalCharacter {
  std::int64_t p = 2;
  bool ramified = false;
  std::complex<double> at_p{1.0, 0.0};
  DirichletCharacter unit_char = DirichletCharacter::principal(1);  // chi's p-primary factor
  int conductor_exp = 0;

  static LocalCharacter from(const DirichletCharacter& primitive_chi, std::int64_t p);

  std::complex<double> on_unit(std::int64_t u) const;  // omega_p(u)
};

// p-primary factor of chi (a character mod p^{v_p(q)}) and the factor away
// from p (mod q / p^{v_p(q)}); chi agrees with their product on units.
DirichletCharacter primary_factor(const DirichletCharacter& chi, std::int64_t p);
DirichletCharacter complement_factor(const DirichletCharacter& chi, std::int64_t p);

// Rational function in X = p^{-s} with complex coefficients.
struct EulerFactor {
  std::int64_t p = 2;
  std::vector<std::complex<double>> num{{1.0, 0.0}};
  std::vector<std::complex<double>> den{{1.0, 0.0}};

  static EulerFactor one(std::int64_t p);
  // 1 / (1 - c X)
  static EulerFactor standard(std::int64_t p, std::complex<double> c);

  std::complex<double> eval_X(std::complex<double> X) const;
  std::complex<double> eval_s(std::complex<double> s) const;
  EulerFactor operator*(const EulerFactor& o) const;

  // trims trailing (near-)zero coefficients and rescales so den[0] = 1
  void normalize(double eps = 0.0);
  // num * o.den == o.num * den as polynomials, coefficient-wise within tol
  bool equals(const EulerFactor& o, double tol = 0.0) const;
};

std::vector<std::complex<double>> poly_mul(const std::vector<std::complex<double>>& a,
                                           const std::vector<std::complex<double>>& b);

// Bruhat-Schwartz function on Q_p: supported in p^{-M} Z_p, invariant under
// translation by p^N Z_p.  values[r] is the value on the coset
// p^{-M} (r + p^{M+N} Z_p), r = 0 .. p^{M+N}-1; in particular values[0] is
// the value on the ball p^N Z_p containing 0.
class PAdicTestFunction {
 public:
  PAdicTestFunction(std::int64_t p, int M, int N, std::vector<std::complex<double>> values);

  static PAdicTestFunction zero(std::int64_t p);
  static PAdicTestFunction indicator_zp(std::int64_t p);      // 1_{Z_p}
  static PAdicTestFunction indicator_units(std::int64_t p);   // 1_{Z_p^x}
  static PAdicTestFunction indicator_ball(std::int64_t p, int v);   // 1_{p^v Z_p}
  static PAdicTestFunction indicator_shell(std::int64_t p, int v);  // 1_{p^v Z_p^x}
  // chi on Z_p^x (through its mod-p^a values), 0 elsewhere
  static PAdicTestFunction from_unit_character(const DirichletCharacter& chi_mod_pa,
                                               std::int64_t p);

  std::int64_t prime() const { return p_; }
  int outer_exp() const { return M_; }        // support in p^{-M} Z_p
  int smoothness_exp() const { return N_; }   // invariant under p^N Z_p
  const std::vector<std::complex<double>>& values() const { return values_; }

  std::complex<double> value_at_zero() const { return values_[0]; }
  // value at a/b; returns 0 outside the support
  std::complex<double> value_at_rational(std::int64_t a, std::int64_t b = 1) const;

  PAdicTestFunction operator+(const PAdicTestFunction& o) const;
  PAdicTestFunction operator-(const PAdicTestFunction& o) const;
  PAdicTestFunction operator*(std::complex<double> c) const;
  PAdicTestFunction unit_translate(std::int64_t u) const;  // x -> f(u x), gcd(u, p) = 1
  PAdicTestFunction dilate(int j) const;                   // x -> f(p^j x)
  PAdicTestFunction reflect() const;                       // x -> f(-x)

  // brings (M, N) to a common refinement with o
  std::pair<PAdicTestFunction, PAdicTestFunction> aligned_with(const PAdicTestFunction& o) const;

  PAdicTestFunction canonicalized(double eps = 1e-12) const;
  bool equals(const PAdicTestFunction& o, double eps = 0.0) const;

  bool is_standard() const;  // canonical form equals 1_{Z_p}

  // exact unit-coset average  (1/vol) int_{Z_p^x} f(q u) conj(chi(u)) d*u
  // with q = a/b rational; chi = nullptr means no character weight.
  std::complex<double> unit_average_scaled(std::int64_t a, std::int64_t b,
                                           const DirichletCharacter* chi) const;

  // average over the shell p^v Z_p^x (no character)
  std::complex<double> shell_average(int v) const;

 private:
  std::int64_t p_;
  int M_, N_;
  std::vector<std::complex<double>> values_;
};

// ---------------------------------------------------------------------------
// Local operations
// ---------------------------------------------------------------------------

// int_{Q_p^x} f(x) omega_p(x) |x|^s d*x, shell sums in closed form; the tail
// where f is constant is a geometric series.  Throws ConvergenceError when
// that series diverges.
std::complex<double> local_zeta(const PAdicTestFunction& f, const HeckeCharacterPoint& chi);

// The same integral as a rational function of X = p^{-s}.  Requires support
// in Z_p (M = 0): deeper support would put a pole at X = 0, which this
// representation excludes.  Ramification deeper than the smoothness exponent
// is rejected.
EulerFactor local_zeta_symbolic(const PAdicTestFunction& f, const DirichletCharacter& chi);

// Unramified variant: the character component at p is just the number
// c = chi(p).
EulerFactor local_zeta_symbolic_unramified(const PAdicTestFunction& f, std::complex<double> c);

// Fourier transform with respect to psi(x) = exp(2*pi*i*{x}_p); exact
// normalized DFT on the finite quotient, (M, N) swapped.  By default the
// output is canonicalized with a relative tolerance that rounds away DFT
// noise on Gaussian-rational inputs; strict mode keeps the raw output and
// canonicalizes with tolerance 0.
PAdicTestFunction local_fourier(const PAdicTestFunction& f, bool strict = false);

// Convolution with the distribution (0 for |g|>1; delta_1 at |g|=1; 1 for
// |g|<1).  Input must vanish on a neighborhood of 0; sends 1_{Z_p^x} to
// 1_{Z_p}.
PAdicTestFunction generator_convolve(const PAdicTestFunction& f);

// ((1_{Z_p^x} - 1_{p Z_p^x}), 1_{Z_p}): the image of the distinguished
// vector, whose symbolic zeta factors multiply to 1.
std::pair<PAdicTestFunction, PAdicTestFunction> distinguished_decomposition(std::int64_t p);

}  // namespace adele
