// Benchmark comparing the OpenMP kernels against their serial references.
// Each kernel fills independent slots and reduces serially, so results must
// match bit for bit; the table prints both timings and the max deviation.
//
//   ./zeta-bench [reps]

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "adele/arch.hpp"
#include "adele/characters.hpp"
#include "adele/dirichlet_series.hpp"
#include "adele/global.hpp"
#include "adele/parallel.hpp"
#include "adele/primes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using adele::cdouble;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class F>
double timed(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_ms();
    body();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

struct Case {
  const char* name;
  double serial_ms;
  double parallel_ms;
  double max_dev;
};

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::vector<Case> table;

#ifdef _OPENMP
  std::printf("threads: %d (cap via ADELE_ZETA_THREADS)\n", adele::exec::max_threads());
#else
  std::printf("built without OpenMP; parallel kernels run serially\n");
#endif

  // --- Euler product factors over primes <= 10^6 ------------------------
  {
    const auto primes = adele::primes_up_to(1'000'000);
    const auto chi = adele::DirichletCharacter::kronecker(-4);
    const cdouble s{2.0, 1.0};
    std::vector<cdouble> fs, fp;
    auto fill = [&](std::vector<cdouble>& out, bool par) {
      adele::exec::fill_indexed(
          out, primes.size(),
          [&](std::size_t i) {
            const auto p = primes[i];
            return 1.0 / (1.0 - chi(p) * std::exp(-s * std::log(static_cast<double>(p))));
          },
          par);
    };
    const double ts = timed(reps, [&] { fill(fs, false); });
    const double tp = timed(reps, [&] { fill(fp, true); });
    double dev = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) dev = std::max(dev, std::abs(fs[i] - fp[i]));
    table.push_back({"euler factors, pi(10^6) primes", ts, tp, dev});
  }

  // --- vertical-strip gamma profile --------------------------------------
  {
    std::vector<double> gs, gp;
    auto fill = [&](std::vector<double>& out, bool par) {
      adele::exec::fill_indexed(
          out, 20000,
          [&](std::size_t i) {
            return adele::log_abs_gamma_R({2.0, 10.0 + 0.005 * static_cast<double>(i)});
          },
          par);
    };
    const double ts = timed(reps, [&] { fill(gs, false); });
    const double tp = timed(reps, [&] { fill(gp, true); });
    double dev = 0.0;
    for (std::size_t i = 0; i < gs.size(); ++i) dev = std::max(dev, std::abs(gs[i] - gp[i]));
    table.push_back({"log|Gamma_R| grid, 20000 points", ts, tp, dev});
  }

  // --- continued zeta integrals over a vertical grid ---------------------
  {
    const auto f = adele::GlobalTestFunction::standard().with_finite(
        2, adele::PAdicTestFunction::indicator_units(2));
    const auto triv = adele::DirichletCharacter::principal(1);
    std::vector<cdouble> vs, vp;
    auto fill = [&](std::vector<cdouble>& out, bool par) {
      adele::exec::fill_indexed(
          out, 48,
          [&](std::size_t i) {
            const cdouble s{0.5, 0.5 * static_cast<double>(i)};
            return adele::zeta_continued(f, {triv, s});
          },
          par);
    };
    const double ts = timed(reps, [&] { fill(vs, false); });
    const double tp = timed(reps, [&] { fill(vp, true); });
    double dev = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) dev = std::max(dev, std::abs(vs[i] - vp[i]));
    table.push_back({"continued integrals, 48 grid points", ts, tp, dev});
  }

  std::printf("\n%-36s %12s %12s %10s %12s\n", "kernel", "serial ms", "omp ms", "speedup",
              "max |dev|");
  for (const auto& c : table)
    std::printf("%-36s %12.2f %12.2f %9.2fx %12.3g\n", c.name, c.serial_ms, c.parallel_ms,
                c.serial_ms / std::max(c.parallel_ms, 1e-9), c.max_dev);
  return 0;
}
