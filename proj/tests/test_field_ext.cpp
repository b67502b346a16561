#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "adele/characters.hpp"
#include "adele/dirichlet_series.hpp"
#include "adele/field_ext.hpp"
#include "adele/global.hpp"
#include "adele/primes.hpp"

using namespace adele;
using cplx = std::complex<double>;

TEST_CASE("splitting types in Q(i)") {
  CHECK(splitting_type(5, -4) == SplittingType::split);    // 5 = 1 mod 4
  CHECK(splitting_type(3, -4) == SplittingType::inert);    // 3 = 3 mod 4
  CHECK(splitting_type(2, -4) == SplittingType::ramified); // 2 | 4
  CHECK_THROWS_AS(splitting_type(3, 10), std::invalid_argument);
}

TEST_CASE("dedekind factors") {
  // (1-X)^2, 1-X^2, 1-X in the denominators
  CHECK(dedekind_euler_factor(5, -4).den == std::vector<cplx>{{1.0, 0.0}, {-2.0, 0.0}, {1.0, 0.0}});
  CHECK(dedekind_euler_factor(3, -4).den == std::vector<cplx>{{1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}});
  CHECK(dedekind_euler_factor(2, -4).den == std::vector<cplx>{{1.0, 0.0}, {-1.0, 0.0}});
}

TEST_CASE("place-by-place decomposition, first 50 primes, four discriminants") {
  const auto primes = primes_up_to(229);  // first 50 primes
  REQUIRE(primes.size() == 50);
  for (const std::int64_t d : {-4, 5, -3, 8}) {
    for (const std::int64_t p : primes) {
      const DecompositionCheck c = decomposition_identity(p, d);
      CHECK(c.exact);
      CHECK(c.residual == 0.0);
    }
  }
}

TEST_CASE("global partial products agree within combined truncation bounds") {
  const std::int64_t P = 10000;
  const auto ps = primes_up_to(P);
  for (const std::int64_t d : {-4, 5}) {
    const DirichletCharacter eta = DirichletCharacter::kronecker(d);
    double dedekind = 1.0, factored = 1.0;
    for (const std::int64_t p : ps) {
      const double X = 1.0 / (static_cast<double>(p) * p);
      dedekind *= dedekind_euler_factor(p, d).eval_X(X).real();
      factored *= 1.0 / (1.0 - X) / (1.0 - eta(p).real() * X);
    }
    const double tail = 4.0 / static_cast<double>(P);
    CHECK(std::abs(dedekind - factored) <= tail * (dedekind + factored));
    // and both sit near zeta(2) L(2, eta)
    const double target = (riemann_zeta(2.0) * dirichlet_L(eta, 2.0)).real();
    CHECK(std::abs(dedekind - target) <= 2.0 * tail * target);
  }
}

TEST_CASE("twisted convolution: unit shells") {
  // f1 = f2 = 1_{Z_p^x}, eta unramified: unit-shell convolution of volume 1
  const DirichletCharacter eta = DirichletCharacter::kronecker(-4);
  for (const std::int64_t p : {3, 5, 7}) {
    const PAdicTestFunction u = PAdicTestFunction::indicator_units(p);
    const PAdicTestFunction conv = twisted_convolution(u, u, eta);
    CHECK(conv.equals(u, 1e-13));
  }
  // zero absorbs
  const PAdicTestFunction z = twisted_convolution(PAdicTestFunction::indicator_units(3),
                                                  PAdicTestFunction::zero(3), eta);
  CHECK(z.equals(PAdicTestFunction::zero(3), 1e-15));

  CHECK_THROWS_AS(twisted_convolution(PAdicTestFunction::indicator_units(3),
                                      PAdicTestFunction::indicator_units(5), eta),
                  std::invalid_argument);
  CHECK_THROWS_AS(twisted_convolution(PAdicTestFunction::indicator_zp(3),
                                      PAdicTestFunction::indicator_units(3), eta),
                  std::invalid_argument);
}

TEST_CASE("twisted convolution: zeta shadow identity") {
  // local_zeta(f1 * eta f2, chi, s) = local_zeta(f1, chi, s) local_zeta(f2, chi eta, s)
  const std::int64_t p = 7;
  const DirichletCharacter triv = DirichletCharacter::principal(1);
  const DirichletCharacter eta = DirichletCharacter::kronecker(5);

  const PAdicTestFunction f1 = PAdicTestFunction::indicator_units(p) +
                               PAdicTestFunction::indicator_shell(p, 1) * cplx{0.5, 1.0};
  const PAdicTestFunction f2 = PAdicTestFunction::indicator_units(p) -
                               PAdicTestFunction::indicator_shell(p, -1) * cplx{0.25, 0.0};
  const PAdicTestFunction conv = twisted_convolution(f1, f2, eta);

  for (const cplx s : {cplx{1.5, 0.0}, cplx{0.8, 2.0}}) {
    const cplx lhs = local_zeta(conv, {triv, s});
    const cplx rhs = local_zeta(f1, {triv, s}) * local_zeta(f2, {eta, s});
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));

    // commutativity up to the twist: f1 * eta f2 against chi equals
    // f2 * eta f1 against chi * eta (eta quadratic)
    const PAdicTestFunction swapped = twisted_convolution(f2, f1, eta);
    const cplx lhs2 = local_zeta(swapped, {eta, s});
    const cplx rhs2 = local_zeta(f2, {eta, s}) * local_zeta(f1, {triv, s});
    CHECK(std::abs(lhs2 - rhs2) <= 1e-10 * (1.0 + std::abs(rhs2)));
  }
}

TEST_CASE("norm pushforward") {
  // split p: product of two standard factors
  const NormPushforward sp = norm_pushforward(5, -4);
  CHECK(sp.splitting == SplittingType::split);
  CHECK(sp.matches_dedekind);
  CHECK(sp.unit_index == 1);

  // inert p: X -> X^2 structure
  const NormPushforward in = norm_pushforward(3, -4);
  CHECK(in.splitting == SplittingType::inert);
  CHECK(in.matches_dedekind);

  // ramified p = 2 in Q(i): 1/(1-X), unit image of index 2
  const NormPushforward ram = norm_pushforward(2, -4);
  CHECK(ram.splitting == SplittingType::ramified);
  CHECK(ram.matches_dedekind);
  CHECK(ram.unit_index == 2);
  // mass-1 normalization on the unit shell
  CHECK(std::abs(ram.unit_pushforward.unit_average_scaled(1, 1, nullptr) - 1.0) < 1e-14);
  // supported on the norm classes: value 2 on eta = +1 units, 0 on eta = -1
  CHECK(std::abs(ram.unit_pushforward.value_at_rational(1, 1) - 2.0) < 1e-14);
  CHECK(std::abs(ram.unit_pushforward.value_at_rational(3, 1)) < 1e-14);

  CHECK_THROWS_AS(norm_pushforward(3, 45), std::invalid_argument);  // 45 = 9 * 5
}

TEST_CASE("abelian decomposition: quadratic case reduces to the place-by-place identity") {
  const std::vector<DirichletCharacter> etas{DirichletCharacter::principal(1),
                                             DirichletCharacter::kronecker(-4)};
  const AbelianCheck c3 = abelian_decomposition_identity(3, etas);
  CHECK(c3.exact);
  CHECK(c3.frobenius_order == 2);  // 3 inert
  const AbelianCheck c5 = abelian_decomposition_identity(5, etas);
  CHECK(c5.exact);
  CHECK(c5.frobenius_order == 1);  // 5 splits
}

TEST_CASE("abelian decomposition: conductor-7 cyclic cubic") {
  // the two cubic characters mod 7 plus the trivial one
  std::vector<DirichletCharacter> etas{DirichletCharacter::principal(7)};
  for (const auto& chi : DirichletCharacter::enumerate(7)) {
    if (chi.is_principal()) continue;
    // order 3: chi^3 principal
    if (chi.power(3).is_principal()) etas.push_back(chi);
  }
  REQUIRE(etas.size() == 3);

  // p = 2: order of 2 mod 7 is 3, factors (1-X)(1-wX)(1-w^2X) = 1-X^3
  const AbelianCheck c2 = abelian_decomposition_identity(2, etas);
  CHECK(c2.exact);
  CHECK(c2.frobenius_order == 3);

  // p = 29 = 1 mod 7: f = 1, (1-X)^3
  const AbelianCheck c29 = abelian_decomposition_identity(29, etas);
  CHECK(c29.exact);
  CHECK(c29.frobenius_order == 1);

  // p = 13 = -1 mod 7 lies in the cubic-residue kernel: f = 1
  const AbelianCheck c13 = abelian_decomposition_identity(13, etas);
  CHECK(c13.exact);
  CHECK(c13.frobenius_order == 1);

  // first 25 unramified primes
  int checked = 0;
  for (const std::int64_t p : primes_up_to(120)) {
    if (p == 7) continue;
    if (checked == 25) break;
    const AbelianCheck c = abelian_decomposition_identity(p, etas);
    CHECK(c.exact);
    ++checked;
  }
  CHECK(checked == 25);

  // inconsistent list rejected
  std::vector<DirichletCharacter> bad{DirichletCharacter::principal(1),
                                      DirichletCharacter::kronecker(5)};
  bad.push_back(DirichletCharacter::kronecker(-4));
  CHECK_THROWS_AS(abelian_decomposition_identity(3, bad), std::invalid_argument);
}

TEST_CASE("archimedean side of the decomposition: duplication at 10 points") {
  for (int k = 0; k < 10; ++k) {
    const cplx s{0.5 + 0.35 * k, 1.5 * k};
    CHECK(gamma_duplication_check(s) <= 1e-10);
  }
}

TEST_CASE("quadratic extension data") {
  const QuadraticExtensionData E = QuadraticExtensionData::make(-4);
  CHECK(E.eta.modulus() == 4);
  CHECK(E.ramified_primes == std::vector<std::int64_t>{2});
  CHECK(E.eta.parity() == 1);  // negative discriminant, odd character
  const QuadraticExtensionData E5 = QuadraticExtensionData::make(5);
  CHECK(E5.eta.parity() == 0);
}
