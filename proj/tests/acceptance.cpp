// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "adele/arch.hpp"
#include "adele/characters.hpp"
#include "adele/dirichlet_series.hpp"
#include "adele/field_ext.hpp"
#include "adele/global.hpp"
#include "adele/mellin.hpp"
#include "adele/padic.hpp"
#include "adele/primes.hpp"

using namespace adele;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report(int idx, const char* name, bool ok, double measured, double threshold) {
  std::printf("%s  criterion %d: %-58s  measured=%.3e  allowed=%.3e\n", ok ? "PASS" : "FAIL",
              idx, name, measured, threshold);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- independent oracles ----------------------------------------------------

// zeta(2) by partial sums with a tail bracket
double zeta2_oracle() {
  const int N = 2000000;
  double s = 0.0;
  for (int n = N; n >= 1; --n) s += 1.0 / (static_cast<double>(n) * n);
  return s + 1.0 / (N + 0.5);
}

// pi/4 by the Leibniz series with midpoint acceleration
double pi_over_4_oracle() {
  const int N = 200000;
  double s = 0.0, sign = 1.0;
  for (int n = 0; n < N; ++n, sign = -sign) s += sign / (2.0 * n + 1.0);
  return s + sign / (2.0 * (2.0 * N + 1.0));
}

// Catalan constant by the direct alternating series (midpoint-accelerated)
double catalan_oracle() {
  const int N = 200000;
  double s = 0.0, sign = 1.0;
  for (int n = 0; n < N; ++n, sign = -sign) s += sign / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
  return s + sign / (2.0 * (2.0 * N + 1.0) * (2.0 * N + 1.0));
}

GlobalTestFunction random_test_function(std::mt19937& rng, int max_places) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(0, 3), nplaces(0, max_places), which(0, 2), Md(0, 1),
      Nd(0, 2), coef(-2, 2);
  std::vector<cplx> coeffs;
  const int D = deg(rng);
  for (int m = 0; m <= D; ++m) coeffs.emplace_back(c(rng), c(rng));
  std::map<std::int64_t, PAdicTestFunction> fin;
  const int k = nplaces(rng);
  const std::int64_t ps[3] = {2, 3, 5};
  for (int i = 0; i < k; ++i) {
    const std::int64_t p = ps[which(rng)];
    const int M = Md(rng), N = Nd(rng);
    std::int64_t n = 1;
    for (int j = 0; j < M + N; ++j) n *= p;
    std::vector<cplx> vals(static_cast<std::size_t>(n));
    for (auto& v : vals)
      v = cplx(static_cast<double>(coef(rng)), static_cast<double>(coef(rng)) / 2.0);
    fin.erase(p);
    fin.emplace(p, PAdicTestFunction(p, M, N, std::move(vals)));
  }
  return GlobalTestFunction(ArchTestFunction(coeffs), std::move(fin));
}

// independent brute-force local zeta (explicit shell enumeration to v = 40)
cplx local_zeta_bruteforce(const PAdicTestFunction& f, const DirichletCharacter& chi, cplx s) {
  const std::int64_t p = f.prime();
  const LocalCharacter lc = LocalCharacter::from(chi, p);
  const int R = f.outer_exp() + f.smoothness_exp() + lc.conductor_exp + 1;
  std::int64_t pR = 1;
  for (int i = 0; i < R; ++i) pR *= p;
  const double phiR = static_cast<double>(pR) / p * (p - 1);
  cplx total = 0.0;
  for (int j = -f.outer_exp(); j <= 40; ++j) {
    cplx shell = 0.0;
    std::int64_t pa = 1, pb = 1;
    if (j >= 0)
      for (int i = 0; i < j; ++i) pa *= p;
    else
      for (int i = 0; i < -j; ++i) pb *= p;
    for (std::int64_t u = 1; u < pR; ++u) {
      if (u % p == 0) continue;
      const cplx fv = f.value_at_rational(u * pa, pb);
      if (fv == cplx{0.0, 0.0}) continue;
      shell += fv * lc.on_unit(u);
    }
    shell /= phiR;
    total += shell * std::pow(lc.at_p, j) *
             std::exp(-s * static_cast<double>(j) * std::log(static_cast<double>(p)));
  }
  return total;
}

PAdicTestFunction random_padic(std::mt19937& rng, std::int64_t p) {
  std::uniform_int_distribution<int> Md(0, 1), Nd(0, 2), coef(-2, 2);
  const int M = Md(rng), N = Nd(rng);
  std::int64_t n = 1;
  for (int j = 0; j < M + N; ++j) n *= p;
  std::vector<cplx> vals(static_cast<std::size_t>(n));
  for (auto& v : vals)
    v = cplx(static_cast<double>(coef(rng)), static_cast<double>(coef(rng)) / 2.0);
  return PAdicTestFunction(p, M, N, std::move(vals));
}

}  // namespace

int main() {
  std::printf("acceptance suite (tolerances pinned in code)\n\n");
  const DirichletCharacter triv = DirichletCharacter::principal(1);
  const DirichletCharacter chi4 = DirichletCharacter::kronecker(-4);

  // 1. zeta(2) through the standard generator ------------------------------
  {
    const auto t0 = std::chrono::steady_clock::now();
    const CompletedLFunction L = standard_L(triv);
    const double z2 = (L.evaluate(2.0) / gamma_R(2.0)).real();
    const double elapsed = seconds_since(t0);
    const double oracle = zeta2_oracle();
    const double err = std::abs(z2 - oracle);
    report(1, "zeta(2) stripped value vs partial-sum oracle (1e-8, < 1 s)",
           err <= 1e-8 && std::abs(oracle - kPi * kPi / 6.0) < 1e-9 && elapsed < 1.0, err, 1e-8);
  }

  // 2. functional equation at 20 pseudo-random strip points ----------------
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260810u);
    std::uniform_real_distribution<double> re(0.1, 0.9), im(-20.0, 20.0);
    const CompletedLFunction L0 = standard_L(triv);
    const CompletedLFunction L4 = standard_L(chi4);
    const cplx g = gauss_sum(chi4);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx s{re(rng), im(rng)};
      worst = std::max(worst, std::abs(L0.evaluate(s) - L0.evaluate(1.0 - s)));
      const cplx w = g * cplx{0.0, -1.0} * std::exp(-s * std::log(4.0));
      worst = std::max(worst, std::abs(L4.evaluate(s) - w * L4.evaluate(1.0 - s)));
    }
    const double elapsed = seconds_since(t0);
    report(2, "functional equation, trivial and chi_{-4} (1e-9, < 10 s)",
           worst <= 1e-9 && elapsed < 10.0, worst, 1e-9);
  }

  // 3. polar divisor -------------------------------------------------------
  {
    const GlobalTestFunction f = GlobalTestFunction::standard();
    const PolarData num = residues_numeric(f);
    const double err = std::max(std::abs(num.residue_at_1 - 1.0),
                                std::abs(num.residue_at_0 + 1.0));
    const CompletedLFunction L4 = standard_L(chi4);
    double offpole = 0.0;
    for (const double h : {1e-3, 5e-4}) {
      offpole = std::max(offpole, std::abs(h * L4.evaluate(1.0 + h)));
      offpole = std::max(offpole, std::abs(h * L4.evaluate(cplx(h, 0.0))));
    }
    report(3, "residues at s=1,0 equal (1, -1) (1e-7); chi_{-4} regular",
           err <= 1e-7 && offpole <= 1e-3, err, 1e-7);
  }

  // 4. Poisson / delta identity --------------------------------------------
  {
    std::mt19937 rng(97531u);
    std::uniform_real_distribution<double> lg(std::log(0.25), std::log(4.0));
    std::vector<GlobalTestFunction> fs;
    fs.push_back(GlobalTestFunction::standard());
    fs.push_back(GlobalTestFunction(ArchTestFunction::gaussian() +
                                    ArchTestFunction::monomial_gaussian(1, {0.5, 0.25})));
    fs.push_back(
        GlobalTestFunction::standard().with_finite(2, PAdicTestFunction::indicator_units(2)));
    fs.push_back(GlobalTestFunction(ArchTestFunction::monomial_gaussian(2),
                                    {{3, PAdicTestFunction::indicator_ball(3, 1)}}));
    fs.push_back(GlobalTestFunction(ArchTestFunction::monomial_gaussian(1),
                                    {{2, PAdicTestFunction::from_unit_character(chi4, 2)}}));
    double worst = 0.0;
    for (const auto& f : fs) {
      const GlobalTestFunction Ff = f.fourier();
      const ThetaEngine tf(f, nullptr), tFf(Ff, nullptr);
      const cplx f0 = f.value_at_zero(), Ff0 = Ff.value_at_zero();
      for (int i = 0; i < 20; ++i) {
        const double s = std::exp(lg(rng));
        worst = std::max(worst,
                         std::abs(tf.eval(s) - tFf.eval(1.0 / s) / s - (Ff0 / s - f0)));
      }
    }
    report(4, "theta/Poisson identity, 5 functions x 20 scales (1e-10)", worst <= 1e-10, worst,
           1e-10);
  }

  // 5. local generator and distinguished vector ----------------------------
  {
    bool ok = true;
    for (const std::int64_t p : {2, 3, 5})
      ok = ok && generator_convolve(PAdicTestFunction::indicator_units(p))
                     .equals(PAdicTestFunction::indicator_zp(p), 0.0);
    for (const cplx c : {cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.0, 1.0}}) {
      const auto [g, h] = distinguished_decomposition(5);
      ok = ok && (local_zeta_symbolic_unramified(g, c) * local_zeta_symbolic_unramified(h, c))
                     .equals(EulerFactor::one(5), 0.0);
    }
    report(5, "generator map exact at p=2,3,5; (1-cX)(1-cX)^{-1}=1 exact", ok, ok ? 0.0 : 1.0,
           0.0);
  }

  // 6. decomposition under quadratic and cubic extensions ------------------
  {
    const auto first50 = primes_up_to(229);
    bool exact = first50.size() == 50;
    for (const std::int64_t d : {-4, 5, -3, 8})
      for (const std::int64_t p : first50) exact = exact && decomposition_identity(p, d).exact;

    const std::int64_t P = 10000;
    const auto ps = primes_up_to(P);
    bool global_ok = true;
    for (const std::int64_t d : {-4, 5, -3, 8}) {
      const DirichletCharacter eta = DirichletCharacter::kronecker(d);
      double lhs = 1.0, rhs = 1.0;
      for (const std::int64_t p : ps) {
        const double X = 1.0 / (static_cast<double>(p) * p);
        lhs *= dedekind_euler_factor(p, d).eval_X(X).real();
        rhs *= 1.0 / (1.0 - X) / (1.0 - eta(p).real() * X);
      }
      global_ok = global_ok && std::abs(lhs - rhs) <= 4.0 / P * (lhs + rhs);
    }

    double dup = 0.0;
    for (int k = 0; k < 10; ++k)
      dup = std::max(dup, gamma_duplication_check(cplx{0.6 + 0.3 * k, 1.7 * k}));

    std::vector<DirichletCharacter> etas{DirichletCharacter::principal(7)};
    for (const auto& chi : DirichletCharacter::enumerate(7))
      if (!chi.is_principal() && chi.power(3).is_principal()) etas.push_back(chi);
    bool cubic = etas.size() == 3;
    int checked = 0;
    for (const std::int64_t p : primes_up_to(120)) {
      if (p == 7) continue;
      if (checked == 25) break;
      cubic = cubic && abelian_decomposition_identity(p, etas).exact;
      ++checked;
    }
    cubic = cubic && checked == 25;

    report(6, "L-decomposition: 50 primes exact, global P=1e4, duplication, cubic",
           exact && global_ok && dup <= 1e-10 && cubic, dup, 1e-10);
  }

  // 7. vertical growth -----------------------------------------------------
  {
    const CompletedLFunction L0 = standard_L(triv);
    const GrowthReport g = growth_report(L0, 2.0, 60.0);
    const double dev = std::abs(g.fitted_rate + kPi / 4.0);
    report(7, "log|Lambda(2+it)| decay rate = -pi/4 (0.02); poly band",
           dev <= 0.02 && g.ratio_in_poly_band, dev, 0.02);
  }

  // 8. oracle equivalence of the evaluation routes -------------------------
  {
    std::mt19937 rng(424243u);
    double worst_global = 0.0;
    std::uniform_real_distribution<double> im(-3.0, 3.0);
    for (int i = 0; i < 10; ++i) {
      const GlobalTestFunction f = random_test_function(rng, 2);
      const cplx s{2.0, im(rng)};
      const cplx a = zeta_continued(f, {triv, s});
      const cplx b = zeta_euler(f, {triv, s}, 20000).value;
      worst_global = std::max(worst_global, std::abs(a - b) / (1.0 + std::abs(b)));
    }

    std::uniform_real_distribution<double> re(1.2, 3.0), imm(-4.0, 4.0);
    double worst_local = 0.0;
    const DirichletCharacter chi5 = DirichletCharacter::kronecker(5);
    for (int i = 0; i < 20; ++i) {
      const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[i % 3];
      const PAdicTestFunction g = random_padic(rng, p);
      const cplx s{re(rng), imm(rng)};
      for (const DirichletCharacter& chi : {triv, chi5}) {
        const cplx a = local_zeta(g, {chi, s});
        const cplx b = local_zeta_bruteforce(g, chi, s);
        worst_local = std::max(worst_local, std::abs(a - b) / (1.0 + std::abs(a)));
      }
    }
    report(8, "zeta_euler vs zeta_continued (1e-9); local closed form vs brute (1e-12)",
           worst_global <= 1e-9 && worst_local <= 1e-12, std::max(worst_global, worst_local),
           1e-9);
  }

  // 9. special values of L(chi_{-4}) ----------------------------------------
  {
    const CompletedLFunction L4 = standard_L(chi4);
    const double pi4 = pi_over_4_oracle();
    const double cat = catalan_oracle();
    const double e1 = std::abs(L4.evaluate_stripped(1.0) - pi4);
    const double e2 = std::abs(L4.evaluate_stripped(2.0) - cat);
    report(9, "L(1,chi_{-4}) = pi/4 and L(2,chi_{-4}) = Catalan (1e-9)",
           e1 <= 1e-9 && e2 <= 1e-9, std::max(e1, e2), 1e-9);
  }

  std::printf("\n%s: %d criterion(s) failed\n", g_failures == 0 ? "OK" : "FAILED", g_failures);
  return g_failures == 0 ? 0 : 1;
}
