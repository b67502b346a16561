#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include "adele/characters.hpp"
#include "adele/primes.hpp"

using namespace adele;
using cplx = std::complex<double>;

namespace {

// Euler-criterion oracle for the Legendre symbol at an odd prime.
int legendre_oracle(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  const std::int64_t r = pow_mod(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("enumerate_characters counts and ordering") {
  // q = 1: the unit group is trivial
  auto one = DirichletCharacter::enumerate(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_principal());
  CHECK(one[0](7) == cplx{1.0, 0.0});

  // q = 4: unit group is cyclic of order 2 (brute-force table: the only
  // nontrivial homomorphism sends 3 -> -1)
  auto four = DirichletCharacter::enumerate(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0].is_principal());
  CHECK(four[1](3) == cplx{-1.0, 0.0});

  // q = 5: 2 generates (Z/5)^x; the values at 2 run over the 4th roots of 1
  auto five = DirichletCharacter::enumerate(5);
  REQUIRE(five.size() == 4);
  std::set<std::pair<long, long>> vals;
  for (const auto& chi : five) {
    const RootOfUnity v = chi.value(2);
    REQUIRE(!v.zero);
    vals.insert({v.num, v.den});
  }
  CHECK(vals ==
        std::set<std::pair<long, long>>{{0, 1}, {1, 4}, {1, 2}, {3, 4}});

  for (std::int64_t q : {1, 2, 3, 4, 5, 6, 8, 9, 12, 24, 36, 45, 200}) {
    auto chars = DirichletCharacter::enumerate(q);
    std::int64_t phi = 0;
    for (std::int64_t n = 1; n <= q; ++n)
      if (gcd64(n, q) == 1) ++phi;
    if (q == 1) phi = 1;
    CHECK(static_cast<std::int64_t>(chars.size()) == phi);
    CHECK(chars[0].is_principal());
  }
}

TEST_CASE("evaluation rules") {
  const auto chi4 = DirichletCharacter::enumerate(4)[1];
  CHECK(chi4(3) == cplx{-1.0, 0.0});
  CHECK(chi4(2) == cplx{0.0, 0.0});
  for (const auto& chi : DirichletCharacter::enumerate(6))
    CHECK(chi(4) == cplx{0.0, 0.0});  // gcd(4, 6) = 2

  // |chi(n)| = 1 on units, 0 elsewhere; values are roots of unity of order
  // dividing the group exponent
  for (std::int64_t q : {7, 9, 12, 40}) {
    for (const auto& chi : DirichletCharacter::enumerate(q)) {
      for (std::int64_t n = 0; n < q; ++n) {
        const RootOfUnity v = chi.value(n);
        if (gcd64(n, q) != 1) {
          CHECK(v.zero);
        } else {
          REQUIRE(!v.zero);
          CHECK(std::abs(std::abs(v.to_complex()) - 1.0) < 1e-15);
          CHECK(chi.group().exponent % v.den == 0);
        }
      }
    }
  }
}

TEST_CASE("complete multiplicativity, exhaustive for q <= 200") {
  for (std::int64_t q : {3, 4, 5, 8, 9, 15, 16, 21, 32, 45, 200}) {
    for (const auto& chi : DirichletCharacter::enumerate(q)) {
      for (std::int64_t a = 1; a < q; ++a) {
        if (gcd64(a, q) != 1) continue;
        for (std::int64_t b = a; b < q; ++b) {
          if (gcd64(b, q) != 1) continue;
          CHECK(chi.value(a * b) == chi.value(a) * chi.value(b));
        }
      }
    }
  }
}

TEST_CASE("orthogonality to 1e-12") {
  for (std::int64_t q : {4, 5, 12, 36, 100}) {
    const auto chars = DirichletCharacter::enumerate(q);
    std::int64_t phi = static_cast<std::int64_t>(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        cplx sum = 0.0;
        for (std::int64_t a = 1; a <= q; ++a)
          sum += chars[i](a) * std::conj(chars[j](a));
        const cplx expect = i == j ? cplx(static_cast<double>(phi), 0.0) : cplx(0.0, 0.0);
        CHECK(std::abs(sum - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("kronecker symbol against the Euler-criterion oracle") {
  const auto primes = primes_up_to(100);
  for (std::int64_t d : {-4, 5, -3, 8, -8, 12, -7, 21}) {
    for (std::int64_t p : primes) {
      if (p == 2 || d % p == 0) continue;
      CHECK(kronecker_symbol(d, p) == legendre_oracle(d, p));
    }
  }
}

TEST_CASE("kronecker_character examples and invariants") {
  const auto chi = DirichletCharacter::kronecker(-4);
  CHECK(chi.modulus() == 4);
  CHECK(chi.conductor() == 4);
  CHECK(chi.is_primitive());
  CHECK(chi(3) == cplx{-1.0, 0.0});  // 3 inert in Q(i)
  CHECK(chi(5) == cplx{1.0, 0.0});   // 5 = (2+i)(2-i) splits
  CHECK(chi.parity() == 1);

  const auto chi5 = DirichletCharacter::kronecker(5);
  CHECK(chi5(2) == cplx{-1.0, 0.0});  // 2 inert in Q(sqrt 5)
  CHECK(chi5.parity() == 0);

  CHECK_THROWS_AS(DirichletCharacter::kronecker(10), std::invalid_argument);
  CHECK_THROWS_AS(DirichletCharacter::kronecker(-6), std::invalid_argument);

  // self-conjugate, square is the principal character on units
  for (std::int64_t d : {-4, 5, -3, 8, -8}) {
    const auto eta = DirichletCharacter::kronecker(d);
    CHECK(eta.conjugate() == eta);
    const auto sq = eta.power(2);
    CHECK(sq.is_principal());
    // values match kronecker_symbol everywhere
    for (std::int64_t n = 1; n <= eta.modulus(); ++n) {
      const int k = kronecker_symbol(d, n);
      CHECK(std::abs(eta(n) - cplx(static_cast<double>(k), 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("gauss sums") {
  CHECK(gauss_sum(DirichletCharacter::principal(1)) == cplx{1.0, 0.0});

  // chi_{-4}: direct 4-term oracle computed right here
  const auto chi4 = DirichletCharacter::kronecker(-4);
  cplx oracle = 0.0;
  for (int a = 1; a < 4; ++a)
    oracle += chi4(a) * std::polar(1.0, 2.0 * std::numbers::pi * a / 4.0);
  CHECK(std::abs(oracle - cplx{0.0, 2.0}) < 1e-15);
  CHECK(std::abs(gauss_sum(chi4) - cplx{0.0, 2.0}) < 1e-14);

  // |g(chi)| = sqrt(q) for every primitive character, q <= 50
  for (std::int64_t q = 2; q <= 50; ++q) {
    for (const auto& chi : DirichletCharacter::enumerate(q)) {
      if (!chi.is_primitive()) continue;
      CHECK(std::abs(std::abs(gauss_sum(chi)) - std::sqrt(static_cast<double>(q))) < 1e-12);
    }
  }

  CHECK_THROWS_AS(gauss_sum(DirichletCharacter::principal(4)), std::invalid_argument);
}

TEST_CASE("conductor and primitive part") {
  for (std::int64_t q : {12, 24, 45, 40}) {
    for (const auto& chi : DirichletCharacter::enumerate(q)) {
      CHECK(q % chi.conductor() == 0);
      const auto prim = chi.primitive_part();
      CHECK(prim.modulus() == chi.conductor());
      CHECK(prim.conductor() == chi.conductor());
      // re-induction recovers chi on units of q
      for (std::int64_t n = 1; n <= q; ++n)
        if (gcd64(n, q) == 1) CHECK(chi.value(n) == prim.value(n));
      // parity is inherited
      CHECK(prim.parity() == chi.parity());
    }
  }
}

TEST_CASE("parity matches chi(-1)") {
  for (std::int64_t q : {3, 4, 5, 7, 8, 12, 36}) {
    for (const auto& chi : DirichletCharacter::enumerate(q)) {
      const RootOfUnity v = chi.value(q - 1);
      if (chi.parity() == 0)
        CHECK(v == RootOfUnity::one());
      else
        CHECK(v.to_complex() == cplx{-1.0, 0.0});
    }
  }
}

TEST_CASE("modulus guard") {
  CHECK_THROWS_AS(DirichletCharacter::enumerate(1'000'001), std::domain_error);
  CHECK_NOTHROW(DirichletCharacter::principal(1'000'000));
}

TEST_CASE("Hecke character points") {
  const auto chi = DirichletCharacter::kronecker(-4);
  const HeckeCharacterPoint x(chi, {2.0, 0.0});
  CHECK(x.epsilon() == 1);
  const HeckeCharacterPoint y(DirichletCharacter::principal(1), {0.5, 3.0});
  CHECK(y.epsilon() == 0);
  CHECK(!x.same_component(y));
  CHECK(x.same_component({chi, {-1.0, 7.0}}));

  // an imprimitive finite part is replaced by the inducing character
  const auto imprim = DirichletCharacter::enumerate(12)[1];
  const HeckeCharacterPoint z(imprim, 0.0);
  CHECK(z.finite.is_primitive());
}
