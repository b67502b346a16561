#include "adele/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "adele/primes.hpp"

namespace adele {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd64(a, b) * b; }

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> f;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    f.emplace_back(p, a);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

// Smallest primitive root mod p (p odd prime), lifted so it also generates
// (Z/p^a)^x for every a >= 1.
std::int64_t primitive_root(std::int64_t p, int a) {
  const std::int64_t phi_p = p - 1;
  const auto fac = factorize(phi_p);
  std::int64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (const auto& [q, e] : fac) {
      (void)e;
      if (pow_mod(g, phi_p / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  if (a >= 2) {
    // g generates mod p^a iff g^(p-1) != 1 mod p^2
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
  }
  return g;
}

std::int64_t crt_lift(std::int64_t r, std::int64_t m, std::int64_t q) {
  // smallest x mod q with x = r (mod m), x = 1 (mod q/m); gcd(m, q/m) = 1
  const std::int64_t m2 = q / m;
  if (m2 == 1) return ((r % q) + q) % q;
  // x = r + m*t, need r + m*t = 1 mod m2
  const std::int64_t t = (((1 - r) % m2 + m2) % m2 * inv_mod(m % m2, m2)) % m2;
  return ((r + m * t) % q + q) % q;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootOfUnity
// ---------------------------------------------------------------------------

RootOfUnity RootOfUnity::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
  RootOfUnity r;
  r.zero = false;
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = gcd64(num, den);
  r.num = num / (g ? g : 1);
  r.den = den / (g ? g : 1);
  if (r.num == 0) r.den = 1;
  return r;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  if (zero || o.zero) return RootOfUnity{};
  const std::int64_t d = lcm64(den, o.den);
  return make(num * (d / den) + o.num * (d / o.den), d);
}

RootOfUnity RootOfUnity::conj() const {
  if (zero) return *this;
  return make(den - num, den);
}

std::complex<double> RootOfUnity::to_complex() const {
  if (zero) return {0.0, 0.0};
  // exact values on the axes
  if (den == 1) return {1.0, 0.0};
  if (den == 2) return {-1.0, 0.0};
  if (den == 4) return num == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(den));
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
  if (zero != o.zero) return false;
  if (zero) return true;
  return num == o.num && den == o.den;
}

// ---------------------------------------------------------------------------
// UnitGroup
// ---------------------------------------------------------------------------

UnitGroup::UnitGroup(std::int64_t q_) {
  if (q_ < 1) throw std::invalid_argument("UnitGroup: modulus must be >= 1");
  q = q_;
  factorization = factorize(q);
  phi = 1;
  for (const auto& [p, a] : factorization) {
    std::int64_t pk = 1;
    for (int i = 0; i < a; ++i) pk *= p;
    phi *= pk / p * (p - 1);
  }

  for (const auto& [p, a] : factorization) {
    std::int64_t pk = 1;
    for (int i = 0; i < a; ++i) pk *= p;
    Component c;
    c.p = p;
    c.pk = pk;
    c.first_gen = static_cast<int>(gens.size());

    if (p == 2) {
      if (a == 1) {
        c.n_gens = 0;
        comps_.push_back(std::move(c));
        continue;
      }
      if (a == 2) {
        gens.push_back({crt_lift(3, 4, q), 2, 2});
        c.n_gens = 1;
        comps_.push_back(std::move(c));
        continue;
      }
      // 2^a, a >= 3: (Z/2^a)^x = <-1> x <5>
      c.two_power = true;
      gens.push_back({crt_lift(pk - 1, pk, q), 2, 2});
      const std::int64_t ord5 = pk / 4;
      gens.push_back({crt_lift(5, pk, q), ord5, 2});
      c.n_gens = 2;
      c.table.assign(static_cast<std::size_t>(pk), -1);
      std::int64_t x = 1;
      for (std::int64_t k = 0; k < ord5; ++k) {
        c.table[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k);
        x = (x * 5) % pk;
      }
      comps_.push_back(std::move(c));
      continue;
    }

    const std::int64_t g = primitive_root(p, a);
    const std::int64_t ord = pk / p * (p - 1);
    gens.push_back({crt_lift(g % pk, pk, q), ord, p});
    c.n_gens = 1;
    c.table.assign(static_cast<std::size_t>(pk), -1);
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < ord; ++k) {
      c.table[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k);
      x = static_cast<std::int64_t>((static_cast<__int128>(x) * g) % pk);
    }
    comps_.push_back(std::move(c));
  }

  exponent = 1;
  for (const auto& gen : gens) exponent = lcm64(exponent, gen.order);
}

std::vector<std::int64_t> UnitGroup::dlog(std::int64_t n) const {
  n = ((n % q) + q) % q;
  if (gcd64(n, q) != 1) throw std::domain_error("UnitGroup::dlog: argument not a unit");
  std::vector<std::int64_t> out(gens.size(), 0);
  for (const auto& c : comps_) {
    if (c.n_gens == 0) continue;
    const std::int64_t r = n % c.pk;
    if (c.two_power) {
      // r = (-1)^x0 * 5^x1 mod 2^a; 5-powers are exactly the residues = 1 mod 4
      std::int64_t x0 = 0, r5 = r;
      if (r % 4 == 3) {
        x0 = 1;
        r5 = c.pk - r;
      }
      out[static_cast<std::size_t>(c.first_gen)] = x0;
      out[static_cast<std::size_t>(c.first_gen) + 1] = c.table[static_cast<std::size_t>(r5)];
    } else if (c.pk == 4) {
      out[static_cast<std::size_t>(c.first_gen)] = (r == 3) ? 1 : 0;
    } else {
      out[static_cast<std::size_t>(c.first_gen)] = c.table[static_cast<std::size_t>(r)];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DirichletCharacter
// ---------------------------------------------------------------------------

namespace {

// p-part of the conductor of a character whose restriction to a cyclic
// component of order d (inside (Z/p^a)^x, p odd) has exponent e.
std::int64_t odd_component_conductor(std::int64_t p, std::int64_t d, std::int64_t e) {
  const std::int64_t c = d / gcd64(d, e);  // order of the restricted character
  if (c == 1) return 1;
  std::int64_t b = 1, cc = c;
  while (cc % p == 0) {
    cc /= p;
    ++b;
  }
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < b; ++i) out *= p;
  return out;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> g,
                                       std::vector<std::int64_t> exps)
    : group_(std::move(g)), exps_(std::move(exps)) {
  if (exps_.size() != group_->gens.size())
    throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    const std::int64_t d = group_->gens[j].order;
    exps_[j] = ((exps_[j] % d) + d) % d;
  }

  // conductor, prime component by prime component
  conductor_ = 1;
  std::size_t j = 0;
  for (const auto& [p, a] : group_->factorization) {
    if (p == 2) {
      if (a == 1) continue;
      if (a == 2) {
        if (exps_[j] % 2 == 1) conductor_ *= 4;
        ++j;
        continue;
      }
      const std::int64_t e0 = exps_[j], e1 = exps_[j + 1];
      const std::int64_t d1 = group_->gens[j + 1].order;
      const std::int64_t c1 = d1 / gcd64(d1, e1);
      if (c1 > 1)
        conductor_ *= 4 * c1;
      else if (e0 % 2 == 1)
        conductor_ *= 4;
      j += 2;
      continue;
    }
    conductor_ *= odd_component_conductor(p, group_->gens[j].order, exps_[j]);
    ++j;
  }

  // parity
  if (group_->q <= 2) {
    parity_ = 0;
  } else {
    const RootOfUnity v = value(group_->q - 1);
    parity_ = (v == RootOfUnity::one()) ? 0 : 1;
  }
}

DirichletCharacter DirichletCharacter::principal(std::int64_t q) {
  if (q < 1 || q > kMaxModulus)
    throw std::domain_error("DirichletCharacter: modulus out of range [1, 10^6]");
  auto g = std::make_shared<const UnitGroup>(q);
  return DirichletCharacter(g, std::vector<std::int64_t>(g->gens.size(), 0));
}

DirichletCharacter DirichletCharacter::from_exponents(std::int64_t q,
                                                      std::vector<std::int64_t> exps) {
  if (q < 1 || q > kMaxModulus)
    throw std::domain_error("DirichletCharacter: modulus out of range [1, 10^6]");
  auto g = std::make_shared<const UnitGroup>(q);
  return DirichletCharacter(g, std::move(exps));
}

std::vector<DirichletCharacter> DirichletCharacter::enumerate(std::int64_t q) {
  if (q < 1 || q > kMaxModulus)
    throw std::domain_error("enumerate_characters: modulus out of range [1, 10^6]");
  auto g = std::make_shared<const UnitGroup>(q);
  const std::size_t ng = g->gens.size();
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(g->phi));
  std::vector<std::int64_t> exps(ng, 0);
  while (true) {
    out.emplace_back(DirichletCharacter(g, exps));
    // odometer, last generator fastest; principal character comes first
    std::size_t j = ng;
    while (j > 0) {
      --j;
      if (++exps[j] < g->gens[j].order) break;
      exps[j] = 0;
      if (j == 0) return out;
    }
    if (ng == 0) return out;
  }
}

bool DirichletCharacter::is_principal() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

RootOfUnity DirichletCharacter::value(std::int64_t n) const {
  const std::int64_t q = group_->q;
  if (q == 1) return RootOfUnity::one();
  n = ((n % q) + q) % q;
  if (gcd64(n, q) != 1) return RootOfUnity{};
  const auto x = group_->dlog(n);
  const std::int64_t m = group_->exponent;
  __int128 k = 0;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    const std::int64_t d = group_->gens[j].order;
    k += static_cast<__int128>(exps_[j]) * x[j] % d * (m / d);
    k %= m;
  }
  return RootOfUnity::make(static_cast<std::int64_t>(k % m), m);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = (group_->gens[j].order - exps_[j]) % group_->gens[j].order;
  return DirichletCharacter(group_, std::move(e));
}

DirichletCharacter DirichletCharacter::power(std::int64_t k) const {
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    const std::int64_t d = group_->gens[j].order;
    e[j] = static_cast<std::int64_t>((static_cast<__int128>(exps_[j]) * (k % d) % d + d) % d);
  }
  return DirichletCharacter(group_, std::move(e));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  const std::int64_t c = conductor_;
  if (c == modulus()) return *this;
  auto gc = std::make_shared<const UnitGroup>(c);
  std::vector<std::int64_t> e(gc->gens.size(), 0);
  for (std::size_t j = 0; j < gc->gens.size(); ++j) {
    // lift the generator to a unit mod q in the same class mod c
    std::int64_t u = gc->gens[j].residue;
    while (gcd64(u, modulus()) != 1) u += c;
    const RootOfUnity v = value(u);
    const std::int64_t d = gc->gens[j].order;
    // v = exp(2*pi*i*num/den) must be a d-th root of unity
    if (d % v.den != 0)
      throw std::logic_error("primitive_part: value is not a root of unity of the right order");
    e[j] = v.zero ? 0 : v.num * (d / v.den);
  }
  return DirichletCharacter(gc, std::move(e));
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return modulus() == o.modulus() && exps_ == o.exps_;
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw std::invalid_argument("gauss_sum: character must be primitive");
  const std::int64_t q = chi.modulus();
  if (q == 1) return {1.0, 0.0};
  std::complex<double> s = 0.0;
  for (std::int64_t a = 1; a < q; ++a) {
    const RootOfUnity v = chi.value(a);
    if (v.zero) continue;
    s += v.to_complex() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(a) /
                                              static_cast<double>(q));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Kronecker symbol and fundamental discriminants
// ---------------------------------------------------------------------------

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int k = 1;
  std::int64_t v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) k = -1;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  while (true) {
    a = ((a % n) + n) % n;
    if (a == 0) return n == 1 ? k : 0;
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) {
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) k = -k;
    }
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    const std::int64_t t = n % a;
    n = a;
    a = t;
  }
}

bool is_fundamental_discriminant(std::int64_t d) {
  auto squarefree = [](std::int64_t n) {
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  if (d == 1) return true;
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r == 0) {
    const std::int64_t m = d / 4;
    const std::int64_t rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

DirichletCharacter DirichletCharacter::kronecker(std::int64_t d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("kronecker_character: " + std::to_string(d) +
                                " is not a fundamental discriminant");
  const std::int64_t q = d < 0 ? -d : d;
  if (q > kMaxModulus) throw std::domain_error("kronecker_character: |d| out of range");
  auto g = std::make_shared<const UnitGroup>(q);
  std::vector<std::int64_t> e(g->gens.size(), 0);
  for (std::size_t j = 0; j < g->gens.size(); ++j) {
    const int v = kronecker_symbol(d, g->gens[j].residue);
    if (v == -1) {
      if (g->gens[j].order % 2 != 0)
        throw std::logic_error("kronecker_character: generator of odd order with value -1");
      e[j] = g->gens[j].order / 2;
    }
  }
  return DirichletCharacter(g, std::move(e));
}

}  // namespace adele
