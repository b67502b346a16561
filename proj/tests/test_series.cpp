#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "adele/characters.hpp"
#include "adele/dirichlet_series.hpp"
#include "adele/primes.hpp"

using namespace adele;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

// Oracle: zeta(sigma) by partial sums plus the integral tail bracket
// int_N^inf x^-s dx <= tail <= first term + integral.
double zeta_partial_oracle(double sigma, int N = 200000) {
  double s = 0.0;
  for (int n = 1; n <= N; ++n) s += std::pow(n, -sigma);
  // midpoint of the bracket
  return s + std::pow(N + 0.5, 1.0 - sigma) / (sigma - 1.0);
}

// Oracle: Catalan constant by the alternating series with mean acceleration.
double catalan_oracle() {
  const int N = 20000;
  double s = 0.0, sign = 1.0;
  for (int n = 0; n < N; ++n, sign = -sign) s += sign / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
  const double next = sign / ((2.0 * N + 1.0) * (2.0 * N + 1.0));
  return s + next / 2.0;
}

}  // namespace

TEST_CASE("riemann zeta via Euler-Maclaurin") {
  CHECK(std::abs(riemann_zeta(2.0) - kPi * kPi / 6.0) < 1e-14);
  CHECK(std::abs(riemann_zeta(4.0) - std::pow(kPi, 4) / 90.0) < 1e-14);
  CHECK(std::abs(riemann_zeta(3.0).real() - zeta_partial_oracle(3.0)) < 1e-10);
  CHECK(std::abs(riemann_zeta(1.5).real() - zeta_partial_oracle(1.5)) < 1e-7);

  // a high point on a vertical line: |zeta - 1| < 1 there and the direct
  // Dirichlet sum with tail bracketing agrees to its own accuracy
  const cplx s{2.0, 37.0};
  cplx direct = 0.0;
  const int N = 2000000;
  for (int n = 1; n <= N; ++n)
    direct += std::exp(-s * std::log(static_cast<double>(n)));
  CHECK(std::abs(riemann_zeta(s) - direct) < 2e-6);  // tail of the direct sum
}

TEST_CASE("hurwitz zeta identities") {
  // zeta_H(s, 1/2) = (2^s - 1) zeta(s)
  for (const cplx s : {cplx{2.0, 0.0}, cplx{3.0, 5.0}, cplx{1.5, -2.0}}) {
    const cplx lhs = hurwitz_zeta(s, 0.5);
    const cplx rhs = (std::exp(s * std::log(2.0)) - 1.0) * riemann_zeta(s);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
  }
  // splitting zeta over residues mod 3
  const cplx s{2.2, 1.0};
  const cplx total = std::exp(-s * std::log(3.0)) *
                     (hurwitz_zeta(s, 1.0 / 3.0) + hurwitz_zeta(s, 2.0 / 3.0) +
                      hurwitz_zeta(s, 1.0));
  CHECK(std::abs(total - riemann_zeta(s)) < 1e-12);
  CHECK_THROWS(hurwitz_zeta(cplx{1.0, 0.0}, 1.0));
}

TEST_CASE("dirichlet L values") {
  // L(2, chi_{-4}) is the Catalan constant
  const auto chi4 = DirichletCharacter::kronecker(-4);
  const double catalan = catalan_oracle();
  CHECK(std::abs(catalan - 0.915965594177219015) < 1e-11);
  CHECK(std::abs(dirichlet_L(chi4, 2.0) - catalan) < 1e-11);

  // principal character mod q: zeta with Euler factors removed
  const auto triv6 = DirichletCharacter::principal(6);
  const cplx s{2.0, 0.0};
  const cplx expect = riemann_zeta(s) * (1.0 - 0.25) * (1.0 - 1.0 / 9.0);
  CHECK(std::abs(dirichlet_L(triv6, s) - expect) < 1e-13);

  // Euler product sanity at Re s = 3
  const auto chi5 = DirichletCharacter::kronecker(5);
  cplx prod = 1.0;
  for (const auto p : primes_up_to(200000))
    prod *= 1.0 / (1.0 - chi5(p) * std::pow(static_cast<double>(p), -3.0));
  CHECK(std::abs(dirichlet_L(chi5, 3.0) - prod) < 1e-10);

  // complex quartic character mod 5 against its Euler product
  DirichletCharacter quartic = DirichletCharacter::principal(1);
  for (const auto& c : DirichletCharacter::enumerate(5))
    if (!c.power(2).is_principal()) {
      quartic = c;
      break;
    }
  const cplx sq{2.5, 1.0};
  cplx prod4 = 1.0;
  for (const auto p : primes_up_to(200000)) {
    if (p == 5) continue;
    prod4 *= 1.0 / (1.0 - quartic(p) * std::exp(-sq * std::log(static_cast<double>(p))));
  }
  CHECK(std::abs(dirichlet_L(quartic, sq) - prod4) < 1e-9);
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(49) == 0);
}

TEST_CASE("euler product tail: consistency across cutoffs") {
  const auto chi = DirichletCharacter::kronecker(-4);
  const cplx s{2.0, 0.7};
  const auto small = primes_up_to(100);
  const auto big = primes_up_to(300000);

  // T(100) = sum over primes in (100, 3e5] of -log(1 - chi p^{-s}) + T(3e5)
  cplx middle = 0.0;
  for (const auto p : big) {
    if (p <= 100) continue;
    middle -= std::log(1.0 - chi(p) * std::exp(-s * std::log(static_cast<double>(p))));
  }
  const cplx lhs = euler_log_tail(chi, s, small);
  const cplx rhs = middle + euler_log_tail(chi, s, big);
  CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("euler product with tail correction hits the series value") {
  // zeta(2) from a short product: prod_{p<=100} (1-p^{-2})^{-1} exp(T)
  const auto triv = DirichletCharacter::principal(1);
  const auto primes = primes_up_to(100);
  double prod = 1.0;
  for (const auto p : primes) prod /= 1.0 - 1.0 / (static_cast<double>(p) * p);
  const cplx corrected = prod * std::exp(euler_log_tail(triv, 2.0, primes));
  CHECK(std::abs(corrected - kPi * kPi / 6.0) < 1e-12);
}
