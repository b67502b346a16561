#pragma once

// Decomposition of L-functions under quadratic (and, at Euler-factor level,
// abelian) extensions of Q: splitting types, Dedekind factors, the norm
// pushforward, and the eta-twisted multiplicative convolution.

#include <cstdint>
#include <string>
#include <vector>

#include "adele/characters.hpp"
#include "adele/padic.hpp"

namespace adele {

enum class SplittingType { split, inert, ramified };

const char* to_string(SplittingType t);

struct QuadraticExtensionData {
  std::int64_t discriminant;
  DirichletCharacter eta;
  std::vector<std::int64_t> ramified_primes;

  static QuadraticExtensionData make(std::int64_t d);
};

SplittingType splitting_type(std::int64_t p, std::int64_t d);

// split: 1/(1-X)^2, inert: 1/(1-X^2), ramified: 1/(1-X);  X = p^{-s}
EulerFactor dedekind_euler_factor(std::int64_t p, std::int64_t d);

struct DecompositionCheck {
  bool exact;
  double residual;  // max coefficient deviation after clearing denominators
  EulerFactor dedekind;
  EulerFactor product;  // (1/(1-X)) * (1/(1-eta(p)X))
};

// zeta_{E,p} = zeta_p * L_p(eta), verified on coefficient arrays.
DecompositionCheck decomposition_identity(std::int64_t p, std::int64_t d);

// (f1 * eta f2)(g) = int f1(g'^{-1} g) f2(g') eta_p(g') d*g', computed
// exactly on the shell-coset representation.  Both inputs model S(Q_p^x):
// they must vanish on a neighborhood of 0 and live at the same prime.
PAdicTestFunction twisted_convolution(const PAdicTestFunction& f1, const PAdicTestFunction& f2,
                                      const DirichletCharacter& eta);

struct NormPushforward {
  SplittingType splitting;
  std::string shell_support;  // description of v_p(N(E_p^x))
  int unit_index;             // index of the norm image inside Z_p^x
  // symbolic zeta of the pushforward of the E-side standard vector 1_{O_E},
  // assembled from the splitting combinatorics
  EulerFactor pushforward_zeta;
  bool matches_dedekind;
  // N_! of the unit indicator, mass-normalized so the unit shell carries 1
  PAdicTestFunction unit_pushforward;
};

NormPushforward norm_pushforward(std::int64_t p, std::int64_t d);

struct AbelianCheck {
  bool exact;
  double residual;
  int frobenius_order;  // f: order of p in the character-kernel quotient
};

// prod_i 1/(1 - eta_i(p) X) against (1/(1-X^f))^{d/f} for unramified p.
AbelianCheck abelian_decomposition_identity(std::int64_t p,
                                            const std::vector<DirichletCharacter>& etas);

}  // namespace adele
