#pragma once

// Dirichlet characters with exact root-of-unity values, and the points of
// Chars(Q) they parametrize (primitive character + complex parameter).
//
// The unit group (Z/q)^x is decomposed using primitive roots for odd prime
// powers and the {-1} x <5> structure at powers of two.  Character data is
// an integer exponent per generator; values stay exact until they are
// converted to complex at an evaluation boundary.

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace adele {

// exp(2*pi*i * num/den), or zero.
struct RootOfUnity {
  bool zero = true;
  std::int64_t num = 0;
  std::int64_t den = 1;

  static RootOfUnity make(std::int64_t num, std::int64_t den);
  static RootOfUnity one() { return make(0, 1); }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity conj() const;
  std::complex<double> to_complex() const;
  bool operator==(const RootOfUnity& o) const;
};

// Structure of (Z/q)^x: generators with orders, plus discrete-log tables.
struct UnitGroup {
  struct Generator {
    std::int64_t residue;  // mod q, CRT-lifted from its prime-power component
    std::int64_t order;
    std::int64_t prime;    // prime of the component this generator lives in
  };

  std::int64_t q = 1;
  std::int64_t phi = 1;
  std::int64_t exponent = 1;  // lcm of generator orders
  std::vector<Generator> gens;
  std::vector<std::pair<std::int64_t, int>> factorization;  // q = prod p^a

  explicit UnitGroup(std::int64_t q);

  // Exponent vector of a unit n (one entry per generator); throws if
  // gcd(n, q) != 1.
  std::vector<std::int64_t> dlog(std::int64_t n) const;

 private:
  // per-component dlog tables
  struct Component {
    std::int64_t pk = 1;              // p^a
    std::int64_t p = 1;
    std::vector<std::int32_t> table;  // residue -> dlog for the cyclic part
    bool two_power = false;           // uses the (-1, 5) decomposition
    int first_gen = 0;                // index into `gens` of this component's first generator
    int n_gens = 0;
  };
  std::vector<Component> comps_;
};

class DirichletCharacter {
 public:
  // Documented modulus guard; larger tables would not fit desk-scale memory.
  static constexpr std::int64_t kMaxModulus = 1'000'000;

  static DirichletCharacter principal(std::int64_t q);
  static DirichletCharacter from_exponents(std::int64_t q, std::vector<std::int64_t> exps);

  // All phi(q) characters mod q, principal character first.
  static std::vector<DirichletCharacter> enumerate(std::int64_t q);

  // Quadratic character attached to the fundamental discriminant d.
  static DirichletCharacter kronecker(std::int64_t d);

  std::int64_t modulus() const { return group_->q; }
  std::int64_t conductor() const { return conductor_; }
  int parity() const { return parity_; }  // chi(-1) = (-1)^parity
  bool is_principal() const;
  bool is_primitive() const { return conductor_ == modulus(); }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  const UnitGroup& group() const { return *group_; }

  RootOfUnity value(std::int64_t n) const;          // exact
  std::complex<double> operator()(std::int64_t n) const { return value(n).to_complex(); }

  DirichletCharacter conjugate() const;
  DirichletCharacter power(std::int64_t k) const;
  DirichletCharacter primitive_part() const;  // the inducing character mod conductor

  bool operator==(const DirichletCharacter& o) const;

 private:
  DirichletCharacter(std::shared_ptr<const UnitGroup> g, std::vector<std::int64_t> exps);

  std::shared_ptr<const UnitGroup> group_;
  std::vector<std::int64_t> exps_;
  std::int64_t conductor_ = 1;
  int parity_ = 0;
};

// sum_{a mod q} chi(a) exp(2*pi*i*a/q); requires chi primitive.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

// Kronecker symbol (a|n), defined for all integers n.
int kronecker_symbol(std::int64_t a, std::int64_t n);

bool is_fundamental_discriminant(std::int64_t d);

// A point of one connected component of Chars(Q): primitive finite part
// plus the complex coordinate s on that component.  The archimedean parity
// is forced by triviality on the diagonal Q^x.
struct HeckeCharacterPoint {
  DirichletCharacter finite;  // stored primitive
  std::complex<double> s;

  HeckeCharacterPoint(DirichletCharacter chi, std::complex<double> s_)
      : finite(chi.is_primitive() ? std::move(chi) : chi.primitive_part()), s(s_) {}

  int epsilon() const { return finite.parity(); }
  bool same_component(const HeckeCharacterPoint& o) const { return finite == o.finite; }
};

}  // namespace adele
