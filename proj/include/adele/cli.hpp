#pragma once

// Command-line surface: eval / check / profile subcommands, config
// round-tripping, and the check suites used for CI.  Exit codes: 0 success,
// 1 check failure, 2 config error, 3 evaluation domain error (pole).

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "adele/characters.hpp"

namespace adele::cli {

struct RunConfig {
  std::string command;  // eval | check | profile
  std::string char_spec = "trivial";
  std::vector<std::complex<double>> s_values;
  std::string suite;  // fe | poisson | residues | decompose | generators | growth
  double sigma = 2.0;
  double t_max = 60.0;
  double step = 0.25;
  bool strip_gamma = false;
  bool gamma_only = false;
  std::string format = "json";  // json | csv
  std::string out_path;         // empty -> stdout
  std::int64_t pmax = -1;       // <= 0: per-command default
  std::int64_t d = -4;
  std::vector<std::int64_t> p_list{2, 3, 5};
  std::string method = "continued";  // continued | euler
  double tol = 0.0;                  // 0 -> suite default
  int threads = 0;

  std::string to_json_string() const;
  static RunConfig from_json_string(const std::string& text);
  bool operator==(const RunConfig&) const = default;
};

// "trivial", "d=<disc>" (Kronecker), or "q=<modulus>,i=<index>" (index into
// enumerate_characters, 0 = principal); the result is primitivized.
DirichletCharacter parse_char_spec(const std::string& spec);

// "2", "-1", "0.5+3i", "1-2i", "3i"
std::complex<double> parse_complex(const std::string& text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace adele::cli
