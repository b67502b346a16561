#include "adele/field_ext.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adele/primes.hpp"

namespace adele {

namespace {
std::int64_t ipow_local(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

const char* to_string(SplittingType t) {
  switch (t) {
    case SplittingType::split:
      return "split";
    case SplittingType::inert:
      return "inert";
    case SplittingType::ramified:
      return "ramified";
  }
  return "?";
}

QuadraticExtensionData QuadraticExtensionData::make(std::int64_t d) {
  QuadraticExtensionData out{d, DirichletCharacter::kronecker(d), {}};
  std::int64_t q = d < 0 ? -d : d;
  for (std::int64_t p = 2; p <= q; ++p)
    if (q % p == 0) {
      out.ramified_primes.push_back(p);
      while (q % p == 0) q /= p;
    }
  return out;
}

SplittingType splitting_type(std::int64_t p, std::int64_t d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("splitting_type: d must be a fundamental discriminant");
  const int k = kronecker_symbol(d, p);
  if (k == 0) return SplittingType::ramified;
  return k == 1 ? SplittingType::split : SplittingType::inert;
}

EulerFactor dedekind_euler_factor(std::int64_t p, std::int64_t d) {
  EulerFactor f;
  f.p = p;
  switch (splitting_type(p, d)) {
    case SplittingType::split:
      f.den = {{1.0, 0.0}, {-2.0, 0.0}, {1.0, 0.0}};  // (1 - X)^2
      break;
    case SplittingType::inert:
      f.den = {{1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};  // 1 - X^2
      break;
    case SplittingType::ramified:
      f.den = {{1.0, 0.0}, {-1.0, 0.0}};  // 1 - X
      break;
  }
  return f;
}

DecompositionCheck decomposition_identity(std::int64_t p, std::int64_t d) {
  DecompositionCheck out{false, 0.0, dedekind_euler_factor(p, d), EulerFactor::one(p)};
  const cdouble eta_p = DirichletCharacter::kronecker(d)(p);
  out.product = EulerFactor::standard(p, {1.0, 0.0}) * EulerFactor::standard(p, eta_p);

  const auto lhs = poly_mul(out.dedekind.num, out.product.den);
  const auto rhs = poly_mul(out.product.num, out.dedekind.den);
  double resid = 0.0;
  for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
    const cdouble a = i < lhs.size() ? lhs[i] : 0.0;
    const cdouble b = i < rhs.size() ? rhs[i] : 0.0;
    resid = std::max(resid, std::abs(a - b));
  }
  out.residual = resid;
  out.exact = resid == 0.0;
  return out;
}

PAdicTestFunction twisted_convolution(const PAdicTestFunction& f1, const PAdicTestFunction& f2,
                                      const DirichletCharacter& eta) {
  if (f1.prime() != f2.prime())
    throw std::invalid_argument("twisted_convolution: incompatible moduli (different primes)");
  if (f1.value_at_zero() != cdouble{0.0, 0.0} || f2.value_at_zero() != cdouble{0.0, 0.0})
    throw std::invalid_argument(
        "twisted_convolution: inputs must vanish near 0 (S(Q_p^x) model)");
  const std::int64_t p = f1.prime();
  const DirichletCharacter eta_prim = eta.is_primitive() ? eta : eta.primitive_part();
  const LocalCharacter lc = LocalCharacter::from(eta_prim, p);

  const int M1 = f1.outer_exp(), N1 = f1.smoothness_exp();
  const int M2 = f2.outer_exp(), N2 = f2.smoothness_exp();
  const int Mo = M1 + M2, No = std::max(N1 + N2, 1);

  // unit classes of g' refined enough for f2 and eta; f1's argument needs
  // the inverse of u to this depth as well
  const int R2 = std::max({M2 + N2, lc.conductor_exp, 1});
  const int W = Mo + No + R2 + 2;
  std::int64_t pw = 1;
  for (int i = 0; i < W; ++i) {
    pw *= p;
    if (pw > (std::int64_t{1} << 40)) throw std::length_error("twisted_convolution: depth too large");
  }
  std::int64_t pr2 = 1;
  for (int i = 0; i < R2; ++i) pr2 *= p;
  const double coset_vol = 1.0 / (static_cast<double>(pr2) / p * (p - 1));

  std::int64_t n_out = 1;
  for (int i = 0; i < Mo + No; ++i) n_out *= p;

  std::vector<cdouble> out(static_cast<std::size_t>(n_out), cdouble{0.0, 0.0});
  for (std::int64_t r = 0; r < n_out; ++r) {
    cdouble acc = 0.0;
    for (int j = -M2; j < N2; ++j) {
      const cdouble eta_pj = std::pow(lc.at_p, j);
      for (std::int64_t u = 1; u < pr2; ++u) {
        if (u % p == 0) continue;
        // f2 at p^j u
        const cdouble w2 = j >= 0 ? f2.value_at_rational(u * ipow_local(p, j), 1)
                                  : f2.value_at_rational(u, ipow_local(p, -j));
        if (w2 == cdouble{0.0, 0.0}) continue;
        // f1 at x p^{-j} u^{-1}, x = p^{-Mo} r
        const std::int64_t uinv = inv_mod(u, pw);
        const int e = Mo + j;
        const cdouble w1 = e >= 0 ? f1.value_at_rational(r * uinv % pw, ipow_local(p, e))
                                  : f1.value_at_rational(r * uinv % pw * ipow_local(p, -e), 1);
        if (w1 == cdouble{0.0, 0.0}) continue;
        acc += w1 * w2 * eta_pj * lc.on_unit(u) * coset_vol;
      }
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return PAdicTestFunction(p, Mo, No, std::move(out)).canonicalized(1e-14);
}

NormPushforward norm_pushforward(std::int64_t p, std::int64_t d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("norm_pushforward: d must be a fundamental discriminant");
  const SplittingType st = splitting_type(p, d);
  NormPushforward out{st,
                      "",
                      1,
                      EulerFactor::one(p),
                      false,
                      PAdicTestFunction::indicator_units(p)};
  switch (st) {
    case SplittingType::split:
      // two places above p, norm (a, b) -> ab hits every shell; the
      // pushforward of 1_{O_E} carries mass j+1 on shell j
      out.shell_support = "all shells (norm surjective on valuations)";
      out.pushforward_zeta =
          EulerFactor::standard(p, {1.0, 0.0}) * EulerFactor::standard(p, {1.0, 0.0});
      break;
    case SplittingType::inert: {
      // unramified quadratic: v_p(N(x)) = 2 v_E(x), even shells only
      out.shell_support = "even-valuation shells only";
      EulerFactor f;
      f.p = p;
      f.den = {{1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};  // X -> X^2 in 1/(1-X)
      out.pushforward_zeta = f;
      break;
    }
    case SplittingType::ramified: {
      // e = 2 halves the valuation step: every shell, unit image of index 2
      out.shell_support = "all shells, unit image of index 2";
      out.unit_index = 2;
      out.pushforward_zeta = EulerFactor::standard(p, {1.0, 0.0});
      const DirichletCharacter eta = DirichletCharacter::kronecker(d);
      out.unit_pushforward =
          PAdicTestFunction::indicator_units(p) +
          PAdicTestFunction::from_unit_character(primary_factor(eta, p), p);
      break;
    }
  }
  out.matches_dedekind = out.pushforward_zeta.equals(dedekind_euler_factor(p, d), 0.0);
  return out;
}

AbelianCheck abelian_decomposition_identity(std::int64_t p,
                                            const std::vector<DirichletCharacter>& etas) {
  if (etas.empty()) throw std::invalid_argument("abelian_decomposition_identity: empty list");
  if (!etas[0].is_principal())
    throw std::invalid_argument("abelian_decomposition_identity: eta_0 must be trivial");
  const int dd = static_cast<int>(etas.size());
  std::vector<cdouble> vals;
  for (const auto& eta : etas) {
    const cdouble v = eta(p);
    if (std::abs(v) == 0.0)
      throw std::invalid_argument(
          "abelian_decomposition_identity: p ramified in the character list");
    vals.push_back(v);
  }

  // f = order of Frobenius: least f with eta_i(p)^f = 1 for all i
  int f = 0;
  for (int cand = 1; cand <= dd; ++cand) {
    bool all_one = true;
    for (const cdouble& v : vals)
      if (std::abs(std::pow(v, cand) - cdouble{1.0, 0.0}) > 1e-9) all_one = false;
    if (all_one) {
      f = cand;
      break;
    }
  }
  if (f == 0 || dd % f != 0)
    throw std::invalid_argument("abelian_decomposition_identity: inconsistent character list");

  // prod_i (1 - eta_i(p) X) vs (1 - X^f)^{d/f}
  std::vector<cdouble> lhs{{1.0, 0.0}};
  for (const cdouble& v : vals) lhs = poly_mul(lhs, {{1.0, 0.0}, -v});
  std::vector<cdouble> base(static_cast<std::size_t>(f) + 1, cdouble{0.0, 0.0});
  base[0] = 1.0;
  base[static_cast<std::size_t>(f)] = -1.0;
  std::vector<cdouble> rhs{{1.0, 0.0}};
  for (int i = 0; i < dd / f; ++i) rhs = poly_mul(rhs, base);

  double resid = 0.0;
  for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
    const cdouble a = i < lhs.size() ? lhs[i] : 0.0;
    const cdouble b = i < rhs.size() ? rhs[i] : 0.0;
    resid = std::max(resid, std::abs(a - b));
  }
  return {resid <= 1e-12, resid, f};
}

}  // namespace adele
