#include "adele/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "adele/primes.hpp"

namespace adele {

namespace {

constexpr std::int64_t kMaxQuotient = std::int64_t{1} << 24;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > kMaxQuotient) throw std::length_error("p-adic quotient too large");
    r *= b;
  }
  return r;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) return -1;  // caller treats 0 separately
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t phi_prime_power(std::int64_t p, int r) { return ipow(p, r) / p * (p - 1); }

}  // namespace

// ---------------------------------------------------------------------------
// LocalCharacter
// ---------------------------------------------------------------------------

DirichletCharacter primary_factor(const DirichletCharacter& chi, std::int64_t p) {
  const auto& g = chi.group();
  int a = 0;
  for (const auto& [q, e] : g.factorization)
    if (q == p) a = e;
  if (a == 0) return DirichletCharacter::principal(1);
  std::vector<std::int64_t> exps;
  for (std::size_t j = 0; j < g.gens.size(); ++j)
    if (g.gens[j].prime == p) exps.push_back(chi.exponents()[j]);
  return DirichletCharacter::from_exponents(ipow(p, a), std::move(exps));
}

DirichletCharacter complement_factor(const DirichletCharacter& chi, std::int64_t p) {
  const auto& g = chi.group();
  int a = 0;
  for (const auto& [q, e] : g.factorization)
    if (q == p) a = e;
  if (a == 0) return chi;
  std::vector<std::int64_t> exps;
  for (std::size_t j = 0; j < g.gens.size(); ++j)
    if (g.gens[j].prime != p) exps.push_back(chi.exponents()[j]);
  return DirichletCharacter::from_exponents(chi.modulus() / ipow(p, a), std::move(exps));
}

LocalCharacter LocalCharacter::from(const DirichletCharacter& primitive_chi, std::int64_t p) {
  LocalCharacter lc;
  lc.p = p;
  if (primitive_chi.modulus() % p != 0) {
    lc.ramified = false;
    lc.at_p = primitive_chi(p);
    return lc;
  }
  lc.unit_char = primary_factor(primitive_chi, p);
  lc.conductor_exp = valuation(lc.unit_char.conductor(), p);
  if (lc.conductor_exp <= 0) lc.conductor_exp = 0;
  lc.ramified = lc.conductor_exp > 0;
  lc.at_p = complement_factor(primitive_chi, p)(p);
  return lc;
}

std::complex<double> LocalCharacter::on_unit(std::int64_t u) const {
  if (!ramified) return {1.0, 0.0};
  return unit_char.value(u).conj().to_complex();
}

// ---------------------------------------------------------------------------
// EulerFactor
// ---------------------------------------------------------------------------

std::vector<std::complex<double>> poly_mul(const std::vector<std::complex<double>>& a,
                                           const std::vector<std::complex<double>>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::complex<double>> c(a.size() + b.size() - 1, {0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

EulerFactor EulerFactor::one(std::int64_t p) {
  EulerFactor f;
  f.p = p;
  return f;
}

EulerFactor EulerFactor::standard(std::int64_t p, std::complex<double> c) {
  EulerFactor f;
  f.p = p;
  f.den = {{1.0, 0.0}, -c};
  return f;
}

std::complex<double> EulerFactor::eval_X(std::complex<double> X) const {
  auto horner = [&X](const std::vector<std::complex<double>>& c) {
    std::complex<double> v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * X + c[i];
    return v;
  };
  const std::complex<double> d = horner(den);
  if (d == std::complex<double>{0.0, 0.0})
    throw std::domain_error("EulerFactor: denominator vanishes at X");
  return horner(num) / d;
}

std::complex<double> EulerFactor::eval_s(std::complex<double> s) const {
  return eval_X(std::exp(-s * std::log(static_cast<double>(p))));
}

EulerFactor EulerFactor::operator*(const EulerFactor& o) const {
  if (p != o.p) throw std::invalid_argument("EulerFactor: mixed primes");
  EulerFactor f;
  f.p = p;
  f.num = poly_mul(num, o.num);
  f.den = poly_mul(den, o.den);
  return f;
}

void EulerFactor::normalize(double eps) {
  auto trim = [eps](std::vector<std::complex<double>>& c) {
    while (c.size() > 1 && std::abs(c.back()) <= eps) c.pop_back();
  };
  trim(num);
  trim(den);
  if (den.empty() || std::abs(den[0]) == 0.0)
    throw std::logic_error("EulerFactor: denominator constant term vanishes");
  const std::complex<double> d0 = den[0];
  if (d0 != std::complex<double>{1.0, 0.0}) {
    for (auto& c : num) c /= d0;
    for (auto& c : den) c /= d0;
  }
}

bool EulerFactor::equals(const EulerFactor& o, double tol) const {
  if (p != o.p) return false;
  const auto lhs = poly_mul(num, o.den);
  const auto rhs = poly_mul(o.num, den);
  const std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> a = i < lhs.size() ? lhs[i] : 0.0;
    const std::complex<double> b = i < rhs.size() ? rhs[i] : 0.0;
    if (std::abs(a - b) > tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PAdicTestFunction
// ---------------------------------------------------------------------------

PAdicTestFunction::PAdicTestFunction(std::int64_t p, int M, int N,
                                     std::vector<std::complex<double>> values)
    : p_(p), M_(M), N_(N), values_(std::move(values)) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("PAdicTestFunction: p must be prime");
  if (M < 0 || N < 0) throw std::invalid_argument("PAdicTestFunction: M, N must be >= 0");
  if (static_cast<std::int64_t>(values_.size()) != ipow(p, M + N))
    throw std::invalid_argument("PAdicTestFunction: values size must be p^(M+N)");
}

PAdicTestFunction PAdicTestFunction::zero(std::int64_t p) {
  return PAdicTestFunction(p, 0, 0, {{0.0, 0.0}});
}

PAdicTestFunction PAdicTestFunction::indicator_zp(std::int64_t p) {
  return PAdicTestFunction(p, 0, 0, {{1.0, 0.0}});
}

PAdicTestFunction PAdicTestFunction::indicator_units(std::int64_t p) {
  std::vector<std::complex<double>> v(static_cast<std::size_t>(p), {1.0, 0.0});
  v[0] = 0.0;
  return PAdicTestFunction(p, 0, 1, std::move(v));
}

PAdicTestFunction PAdicTestFunction::indicator_ball(std::int64_t p, int v) {
  if (v >= 0) {
    std::vector<std::complex<double>> vals(static_cast<std::size_t>(ipow(p, v)), {0.0, 0.0});
    vals[0] = 1.0;
    return PAdicTestFunction(p, 0, v, std::move(vals));
  }
  std::vector<std::complex<double>> vals(static_cast<std::size_t>(ipow(p, -v)), {1.0, 0.0});
  return PAdicTestFunction(p, -v, 0, std::move(vals));
}

PAdicTestFunction PAdicTestFunction::indicator_shell(std::int64_t p, int v) {
  const int M = v < 0 ? -v : 0;
  const int N = v < 0 ? 1 : v + 1;
  const std::int64_t n = ipow(p, M + N);
  std::vector<std::complex<double>> vals(static_cast<std::size_t>(n), {0.0, 0.0});
  for (std::int64_t r = 1; r < n; ++r)
    if (valuation(r, p) == v + M) vals[static_cast<std::size_t>(r)] = 1.0;
  return PAdicTestFunction(p, M, N, std::move(vals));
}

PAdicTestFunction PAdicTestFunction::from_unit_character(const DirichletCharacter& chi,
                                                         std::int64_t p) {
  const std::int64_t q = chi.modulus();
  if (q == 1) return indicator_units(p);
  std::int64_t pk = 1;
  int a = 0;
  while (pk < q) {
    pk *= p;
    ++a;
  }
  if (pk != q)
    throw std::invalid_argument("from_unit_character: character modulus must be a power of p");
  std::vector<std::complex<double>> vals(static_cast<std::size_t>(q));
  for (std::int64_t r = 0; r < q; ++r) vals[static_cast<std::size_t>(r)] = chi(r);
  return PAdicTestFunction(p, 0, a, std::move(vals));
}

std::complex<double> PAdicTestFunction::value_at_rational(std::int64_t a, std::int64_t b) const {
  if (b == 0) throw std::invalid_argument("value_at_rational: zero denominator");
  if (a == 0) return values_[0];
  const std::int64_t n = static_cast<std::int64_t>(values_.size());
  const int va = valuation(a < 0 ? -a : a, p_);
  const int vb = valuation(b < 0 ? -b : b, p_);
  const int v = va - vb;
  if (v < -M_) return 0.0;  // outside the support
  int e = M_ + v;
  if (e >= M_ + N_) return values_[0];
  std::int64_t au = a;
  for (int i = 0; i < va; ++i) au /= p_;
  std::int64_t bu = b;
  for (int i = 0; i < vb; ++i) bu /= p_;
  au %= n;
  if (au < 0) au += n;
  bu %= n;
  if (bu < 0) bu += n;
  const __int128 idx =
      static_cast<__int128>(ipow(p_, e)) % n * au % n * inv_mod(bu, n) % n;
  return values_[static_cast<std::size_t>(idx)];
}

std::pair<PAdicTestFunction, PAdicTestFunction> PAdicTestFunction::aligned_with(
    const PAdicTestFunction& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PAdicTestFunction: mixed primes");
  const int M = std::max(M_, o.M_), N = std::max(N_, o.N_);
  auto extend = [](const PAdicTestFunction& f, int M, int N) {
    const std::int64_t n = ipow(f.p_, M + N);
    std::vector<std::complex<double>> vals(static_cast<std::size_t>(n));
    const std::int64_t shift = ipow(f.p_, M - f.M_);  // index scale from the M raise
    const std::int64_t n0 = static_cast<std::int64_t>(f.values_.size());
    for (std::int64_t r = 0; r < n; ++r) {
      vals[static_cast<std::size_t>(r)] =
          (r % shift == 0) ? f.values_[static_cast<std::size_t>((r / shift) % n0)] : 0.0;
    }
    return PAdicTestFunction(f.p_, M, N, std::move(vals));
  };
  return {extend(*this, M, N), extend(o, M, N)};
}

PAdicTestFunction PAdicTestFunction::operator+(const PAdicTestFunction& o) const {
  auto [a, b] = aligned_with(o);
  for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
  return a;
}

PAdicTestFunction PAdicTestFunction::operator-(const PAdicTestFunction& o) const {
  auto [a, b] = aligned_with(o);
  for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] -= b.values_[i];
  return a;
}

PAdicTestFunction PAdicTestFunction::operator*(std::complex<double> c) const {
  PAdicTestFunction f = *this;
  for (auto& v : f.values_) v *= c;
  return f;
}

PAdicTestFunction PAdicTestFunction::unit_translate(std::int64_t u) const {
  const std::int64_t n = static_cast<std::int64_t>(values_.size());
  std::int64_t uu = ((u % n) + n) % n;
  if (gcd64(uu, p_) != 1) throw std::invalid_argument("unit_translate: u must be a p-adic unit");
  std::vector<std::complex<double>> vals(values_.size());
  for (std::int64_t r = 0; r < n; ++r)
    vals[static_cast<std::size_t>(r)] =
        values_[static_cast<std::size_t>(static_cast<__int128>(uu) * r % n)];
  return PAdicTestFunction(p_, M_, N_, std::move(vals));
}

PAdicTestFunction PAdicTestFunction::dilate(int j) const {
  const int M = std::max(M_ + j, 0), N = std::max(N_ - j, 0);
  const std::int64_t n = ipow(p_, M + N);
  std::vector<std::complex<double>> vals(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    // representative x = p^{-M} r; evaluate f at p^j x = p^{j-M} r
    const int e = j - M;
    if (e >= 0)
      vals[static_cast<std::size_t>(r)] = value_at_rational(r * ipow(p_, e), 1);
    else
      vals[static_cast<std::size_t>(r)] = value_at_rational(r, ipow(p_, -e));
  }
  return PAdicTestFunction(p_, M, N, std::move(vals)).canonicalized(0.0);
}

PAdicTestFunction PAdicTestFunction::reflect() const {
  const std::int64_t n = static_cast<std::int64_t>(values_.size());
  std::vector<std::complex<double>> vals(values_.size());
  for (std::int64_t r = 0; r < n; ++r)
    vals[static_cast<std::size_t>(r)] = values_[static_cast<std::size_t>((n - r) % n)];
  return PAdicTestFunction(p_, M_, N_, std::move(vals));
}

PAdicTestFunction PAdicTestFunction::canonicalized(double eps) const {
  std::int64_t p = p_;
  int M = M_, N = N_;
  std::vector<std::complex<double>> v = values_;
  bool changed = true;
  while (changed) {
    changed = false;
    // drop smoothness level: invariant under p^{N-1} Z_p
    while (N > 0) {
      const std::int64_t n = static_cast<std::int64_t>(v.size());
      const std::int64_t half = n / p;
      bool invariant = true;
      for (std::int64_t r = 0; r < n && invariant; ++r)
        if (std::abs(v[static_cast<std::size_t>(r)] -
                     v[static_cast<std::size_t>((r + half) % n)]) > eps)
          invariant = false;
      if (!invariant) break;
      v.resize(static_cast<std::size_t>(half));
      --N;
      changed = true;
    }
    // drop outer shell: zero on valuation -M
    while (M > 0) {
      const std::int64_t n = static_cast<std::int64_t>(v.size());
      bool vanishes = true;
      for (std::int64_t r = 1; r < n && vanishes; ++r)
        if (r % p != 0 && std::abs(v[static_cast<std::size_t>(r)]) > eps) vanishes = false;
      if (!vanishes) break;
      std::vector<std::complex<double>> w(static_cast<std::size_t>(n / p));
      for (std::int64_t r = 0; r < n / p; ++r)
        w[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(r * p)];
      v = std::move(w);
      --M;
      changed = true;
    }
  }
  return PAdicTestFunction(p, M, N, std::move(v));
}

bool PAdicTestFunction::equals(const PAdicTestFunction& o, double eps) const {
  const PAdicTestFunction a = canonicalized(eps), b = o.canonicalized(eps);
  if (a.p_ != b.p_ || a.M_ != b.M_ || a.N_ != b.N_) return false;
  for (std::size_t i = 0; i < a.values_.size(); ++i)
    if (std::abs(a.values_[i] - b.values_[i]) > eps) return false;
  return true;
}

bool PAdicTestFunction::is_standard() const { return equals(indicator_zp(p_), 0.0); }

std::complex<double> PAdicTestFunction::unit_average_scaled(std::int64_t a, std::int64_t b,
                                                            const DirichletCharacter* chi) const {
  if (a == 0) {
    if (chi == nullptr || chi->is_principal()) return values_[0];
    return 0.0;
  }
  int R = M_ + N_;
  if (chi != nullptr) {
    const std::int64_t q = chi->modulus();
    int aq = 0;
    std::int64_t pk = 1;
    while (pk < q) {
      pk *= p_;
      ++aq;
    }
    if (pk != q) throw std::invalid_argument("unit_average_scaled: chi modulus not a power of p");
    R = std::max(R, aq);
  }
  R = std::max(R, 1);
  const std::int64_t pr = ipow(p_, R);
  std::complex<double> sum = 0.0;
  for (std::int64_t u = 1; u < pr; ++u) {
    if (u % p_ == 0) continue;
    std::complex<double> w = value_at_rational(a * u, b);
    if (chi != nullptr) {
      const RootOfUnity c = chi->value(u);
      if (c.zero) continue;
      w *= c.conj().to_complex();
    }
    sum += w;
  }
  return sum / static_cast<double>(phi_prime_power(p_, R));
}

std::complex<double> PAdicTestFunction::shell_average(int v) const {
  if (v >= 0) return unit_average_scaled(ipow(p_, v), 1, nullptr);
  return unit_average_scaled(1, ipow(p_, -v), nullptr);
}

// ---------------------------------------------------------------------------
// Local operations
// ---------------------------------------------------------------------------

std::complex<double> local_zeta(const PAdicTestFunction& f, const HeckeCharacterPoint& chi) {
  const std::int64_t p = f.prime();
  const LocalCharacter lc = LocalCharacter::from(chi.finite, p);
  const std::complex<double> X = std::exp(-chi.s * std::log(static_cast<double>(p)));
  const std::complex<double> z = lc.at_p * X;

  std::complex<double> sum = 0.0;
  for (int j = -f.outer_exp(); j < f.smoothness_exp(); ++j) {
    const std::int64_t a = j >= 0 ? ipow(p, j) : 1;
    const std::int64_t b = j >= 0 ? 1 : ipow(p, -j);
    const std::complex<double> avg =
        f.unit_average_scaled(a, b, lc.ramified ? &lc.unit_char : nullptr);
    sum += avg * std::pow(z, j);
  }
  if (!lc.ramified) {
    const std::complex<double> f0 = f.value_at_zero();
    if (f0 != std::complex<double>{0.0, 0.0}) {
      if (std::abs(z) >= 1.0) {
        const double abscissa = std::log(std::abs(lc.at_p)) / std::log(static_cast<double>(p));
        throw ConvergenceError(abscissa, "local_zeta: tail diverges, need Re s > " +
                                             std::to_string(abscissa));
      }
      sum += f0 * std::pow(z, f.smoothness_exp()) / (1.0 - z);
    }
  }
  return sum;
}

namespace {

EulerFactor symbolic_factor(const PAdicTestFunction& f, std::complex<double> c,
                            const DirichletCharacter* unit_char) {
  const std::int64_t p = f.prime();
  if (f.outer_exp() != 0)
    throw std::invalid_argument(
        "local_zeta_symbolic: support outside Z_p puts a pole at X = 0; only M = 0 inputs "
        "have a rational-function factor");
  const int N = f.smoothness_exp();
  std::vector<std::complex<double>> poly(static_cast<std::size_t>(N) + 1, {0.0, 0.0});
  std::complex<double> cj = 1.0;
  for (int j = 0; j < N; ++j) {
    poly[static_cast<std::size_t>(j)] = f.unit_average_scaled(ipow(p, j), 1, unit_char) * cj;
    cj *= c;
  }

  EulerFactor out;
  out.p = p;
  if (unit_char != nullptr) {
    poly.pop_back();  // no tail: the ramified unit average of a constant is 0
    out.num = std::move(poly);
    if (out.num.empty()) out.num = {{0.0, 0.0}};
    out.den = {{1.0, 0.0}};
  } else {
    // poly * (1 - cX) + f(0) c^N X^N, all over (1 - cX)
    std::vector<std::complex<double>> numv = poly_mul(poly, {{1.0, 0.0}, -c});
    numv[static_cast<std::size_t>(N)] += f.value_at_zero() * cj;
    out.num = std::move(numv);
    out.den = {{1.0, 0.0}, -c};
  }
  out.normalize(0.0);
  return out;
}

}  // namespace

EulerFactor local_zeta_symbolic(const PAdicTestFunction& f, const DirichletCharacter& chi) {
  const LocalCharacter lc = LocalCharacter::from(chi, f.prime());
  if (lc.conductor_exp > f.smoothness_exp())
    throw std::invalid_argument(
        "local_zeta_symbolic: character ramification exceeds the smoothness exponent");
  return symbolic_factor(f, lc.at_p, lc.ramified ? &lc.unit_char : nullptr);
}

EulerFactor local_zeta_symbolic_unramified(const PAdicTestFunction& f, std::complex<double> c) {
  return symbolic_factor(f, c, nullptr);
}

PAdicTestFunction local_fourier(const PAdicTestFunction& f, bool strict) {
  const std::int64_t p = f.prime();
  const std::int64_t n = static_cast<std::int64_t>(f.values().size());
  const double scale = std::pow(static_cast<double>(p), -f.smoothness_exp());

  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k)
    roots[static_cast<std::size_t>(k)] = RootOfUnity::make(k, n).to_complex();

  std::vector<std::complex<double>> out(static_cast<std::size_t>(n), {0.0, 0.0});
  for (std::int64_t r2 = 0; r2 < n; ++r2) {
    std::complex<double> acc = 0.0;
    for (std::int64_t r = 0; r < n; ++r) {
      const std::complex<double>& v = f.values()[static_cast<std::size_t>(r)];
      if (v == std::complex<double>{0.0, 0.0}) continue;
      acc += v * roots[static_cast<std::size_t>(static_cast<__int128>(r) * r2 % n)];
    }
    out[static_cast<std::size_t>(r2)] = acc * scale;
  }
  PAdicTestFunction g(p, f.smoothness_exp(), f.outer_exp(), std::move(out));
  if (strict) return g.canonicalized(0.0);
  double mx = 0.0;
  for (const auto& v : g.values()) mx = std::max(mx, std::abs(v));
  return g.canonicalized(1e-13 * (1.0 + mx));
}

PAdicTestFunction generator_convolve(const PAdicTestFunction& f) {
  if (f.value_at_zero() != std::complex<double>{0.0, 0.0})
    throw std::invalid_argument(
        "generator_convolve: input must vanish on a neighborhood of 0 (S(Q_p^x) model)");
  const std::int64_t p = f.prime();
  const int M = f.outer_exp(), N = f.smoothness_exp();
  const std::int64_t n = static_cast<std::int64_t>(f.values().size());

  // shell averages a_v for v = -M .. N-1 (zero beyond), and partial sums
  std::vector<std::complex<double>> avg(static_cast<std::size_t>(M + N), {0.0, 0.0});
  for (int v = -M; v < N; ++v) avg[static_cast<std::size_t>(v + M)] = f.shell_average(v);
  std::vector<std::complex<double>> below(static_cast<std::size_t>(M + N) + 1, {0.0, 0.0});
  for (int i = 0; i < M + N; ++i)
    below[static_cast<std::size_t>(i) + 1] = below[static_cast<std::size_t>(i)] +
                                             avg[static_cast<std::size_t>(i)];

  std::vector<std::complex<double>> out(f.values().begin(), f.values().end());
  for (std::int64_t r = 1; r < n; ++r) {
    const int v = valuation(r, p) - M;  // valuation of the coset
    out[static_cast<std::size_t>(r)] += below[static_cast<std::size_t>(v + M)];
  }
  out[0] = below[static_cast<std::size_t>(M + N)];  // ball at 0 collects every shell
  return PAdicTestFunction(p, M, N, std::move(out)).canonicalized(0.0);
}

std::pair<PAdicTestFunction, PAdicTestFunction> distinguished_decomposition(std::int64_t p) {
  return {PAdicTestFunction::indicator_units(p) - PAdicTestFunction::indicator_shell(p, 1),
          PAdicTestFunction::indicator_zp(p)};
}

}  // namespace adele
