#include "adele/dirichlet_series.hpp"

#include <cmath>
#include <stdexcept>

namespace adele {

namespace {

using cdouble = std::complex<double>;

// B_2, B_4, ..., B_24
constexpr double kBernoulli[12] = {
    1.0 / 6.0,           -1.0 / 30.0,         1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,          -691.0 / 2730.0,     7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,     -174611.0 / 330.0,   854513.0 / 138.0,    -236364091.0 / 2730.0};

}  // namespace

std::complex<double> hurwitz_zeta(cdouble s, double x) {
  if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("hurwitz_zeta: need 0 < x <= 1");
  if (s.real() <= 1.0 && s == cdouble{1.0, 0.0})
    throw std::domain_error("hurwitz_zeta: pole at s = 1");

  const int N = std::max(24, static_cast<int>(std::ceil(std::abs(s.imag()) * 1.1)) + 8);
  cdouble sum = 0.0;
  for (int n = 0; n < N; ++n) sum += std::pow(cdouble(static_cast<double>(n) + x, 0.0), -s);

  const cdouble a(static_cast<double>(N) + x, 0.0);
  const cdouble la = std::log(a);
  sum += std::exp((1.0 - s) * la) / (s - 1.0);
  sum += 0.5 * std::exp(-s * la);

  // Euler-Maclaurin correction: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
  cdouble poch = s;           // rising product, starts at (s)_1
  double fact = 2.0;          // (2j)!
  for (int j = 1; j <= 12; ++j) {
    const cdouble term =
        kBernoulli[j - 1] / fact * poch * std::exp((-s - (2.0 * j - 1.0)) * la);
    sum += term;
    if (std::abs(term) < 1e-19 * (1.0 + std::abs(sum))) break;
    poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return sum;
}

std::complex<double> riemann_zeta(cdouble s) { return hurwitz_zeta(s, 1.0); }

std::complex<double> dirichlet_L(const DirichletCharacter& chi, cdouble s) {
  const std::int64_t q = chi.modulus();
  if (q == 1) return riemann_zeta(s);
  const cdouble qs = std::exp(-s * std::log(static_cast<double>(q)));
  cdouble sum = 0.0;
  for (std::int64_t a = 1; a <= q; ++a) {
    const RootOfUnity v = chi.value(a);
    if (v.zero) continue;
    sum += v.to_complex() * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
  }
  return qs * sum;
}

int moebius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius: argument must be positive");
  int k = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++k;
  }
  if (n > 1) ++k;
  return k % 2 == 0 ? 1 : -1;
}

std::complex<double> euler_log_tail(const DirichletCharacter& chi, cdouble s,
                                    const std::vector<std::int64_t>& primes) {
  const double sigma = s.real();
  if (sigma <= 1.0) throw std::domain_error("euler_log_tail: need Re s > 1");
  const double P = primes.empty() ? 2.0 : static_cast<double>(primes.back());

  // prime zeta with character: PZ(psi, w) = sum_p psi(p) p^{-w}
  //                                       = sum_m mu(m)/m log L(psi^m, m w)
  auto prime_zeta = [](const DirichletCharacter& psi, cdouble w) {
    cdouble acc = 0.0;
    for (int m = 1; m <= 64; ++m) {
      if (std::exp2(1.0 - static_cast<double>(m) * w.real()) < 1e-21) break;
      const int mu = moebius(m);
      if (mu == 0) continue;
      acc += static_cast<double>(mu) / static_cast<double>(m) *
             std::log(dirichlet_L(psi.power(m), static_cast<double>(m) * w));
    }
    return acc;
  };

  // sum_{p > P} -log(1 - chi(p) p^{-s}) = sum_k (1/k) [PZ(chi^k, ks) - partial_k]
  cdouble tail = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double ksigma = static_cast<double>(k) * sigma;
    if (std::pow(P, 1.0 - ksigma) / ((ksigma - 1.0) * k) < 1e-19) break;
    const DirichletCharacter chik = chi.power(k);
    const cdouble ks = static_cast<double>(k) * s;
    cdouble partial = 0.0;
    for (const std::int64_t p : primes) {
      if (std::pow(static_cast<double>(p), -ksigma) < 1e-21) break;  // primes ascend
      const RootOfUnity v = chik.value(p);
      if (v.zero) continue;
      partial += v.to_complex() * std::exp(-ks * std::log(static_cast<double>(p)));
    }
    tail += (prime_zeta(chik, ks) - partial) / static_cast<double>(k);
  }
  return tail;
}

}  // namespace adele
