#pragma once

// Series-side evaluation in the right half-plane: Hurwitz zeta by
// Euler-Maclaurin, Dirichlet L-values for Re s > 1, and the Moebius / log-L
// acceleration of the Euler-product tail
//     sum_{p > P} sum_{k >= 1} chi(p)^k p^{-ks} / k.
// These are series routes, independent of both the truncated product and
// the theta-integral continuation they cross-check.

#include <complex>
#include <cstdint>
#include <vector>

#include "adele/characters.hpp"

namespace adele {

// sum_{n >= 0} (n + x)^{-s} for 0 < x <= 1; accurate for Re s > 1 on the
// ranges used here (|Im s| up to a few hundred).
std::complex<double> hurwitz_zeta(std::complex<double> s, double x);

std::complex<double> riemann_zeta(std::complex<double> s);

// L(chi, s) for Re s > 1; chi need not be primitive (the principal
// character gives zeta times the removed Euler factors).
std::complex<double> dirichlet_L(const DirichletCharacter& chi, std::complex<double> s);

// log of the Euler-product tail over p > P at s (Re s > 1):
//   sum_{p > P} -log(1 - chi(p) p^{-s}).
// primes must be the full list of primes <= P.
std::complex<double> euler_log_tail(const DirichletCharacter& chi, std::complex<double> s,
                                    const std::vector<std::int64_t>& primes);

// Moebius function for small arguments.
int moebius(std::int64_t n);

}  // namespace adele
