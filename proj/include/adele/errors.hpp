#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace adele {

using cdouble = std::complex<double>;

// Zeta integral diverges at the requested point; carries the abscissa of
// convergence (the integral converges for Re s strictly above it).
struct ConvergenceError : std::domain_error {
  double abscissa;
  explicit ConvergenceError(double abscissa_, const std::string& what)
      : std::domain_error(what), abscissa(abscissa_) {}
};

// Evaluation requested at a pole; carries the residue there.
struct PoleError : std::domain_error {
  std::complex<double> location;
  std::complex<double> residue;
  PoleError(std::complex<double> loc, std::complex<double> res, const std::string& what)
      : std::domain_error(what), location(loc), residue(res) {}
};

}  // namespace adele
