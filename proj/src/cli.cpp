#include "adele/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adele/arch.hpp"
#include "adele/dirichlet_series.hpp"
#include "adele/field_ext.hpp"
#include "adele/global.hpp"
#include "adele/mellin.hpp"
#include "adele/parallel.hpp"
#include "adele/primes.hpp"

namespace adele::cli {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

json complex_to_json(cdouble z) { return json::array({z.real(), z.imag()}); }

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void line(const std::string& name, bool ok, double residual, double threshold) {
    out << (ok ? "PASS" : "FAIL") << "  " << name << "  residual=" << residual
        << "  threshold=" << threshold << "\n";
    if (!ok) ++failures;
  }
};

std::vector<cdouble> random_strip_points(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> re(0.1, 0.9), im(-20.0, 20.0);
  std::vector<cdouble> out;
  for (int i = 0; i < count; ++i) out.emplace_back(re(rng), im(rng));
  return out;
}

// ---------------------------------------------------------------------------
// check suites
// ---------------------------------------------------------------------------

int suite_fe(Reporter& rep, double tol) {
  if (tol <= 0.0) tol = 1e-9;
  const auto points = random_strip_points(20, 20260810u);

  const CompletedLFunction L0 = standard_L(DirichletCharacter::principal(1));
  double worst = 0.0;
  for (const cdouble& s : points)
    worst = std::max(worst, std::abs(L0.evaluate(s) - L0.evaluate(1.0 - s)));
  rep.line("fe.trivial |Lambda(s)-Lambda(1-s)| at 20 strip points", worst <= tol, worst, tol);

  const DirichletCharacter chi4 = DirichletCharacter::kronecker(-4);
  const CompletedLFunction L4 = standard_L(chi4);
  const cdouble g = gauss_sum(chi4);  // 2i
  const cdouble i_eps = cdouble{0.0, -1.0};  // i^{-eps}, eps = 1
  double worst4 = 0.0;
  for (const cdouble& s : points) {
    const cdouble w = g * i_eps * std::exp(-s * std::log(4.0));
    worst4 = std::max(worst4, std::abs(L4.evaluate(s) - w * L4.evaluate(1.0 - s)));
  }
  rep.line("fe.chi_{-4} root-number identity (gauss_sum oracle)", worst4 <= tol, worst4, tol);
  return rep.failures;
}

std::vector<GlobalTestFunction> poisson_test_functions() {
  std::vector<GlobalTestFunction> fs;
  fs.push_back(GlobalTestFunction::standard());
  fs.push_back(GlobalTestFunction(ArchTestFunction::gaussian() +
                                  ArchTestFunction::monomial_gaussian(1, {0.5, 0.25})));
  fs.push_back(GlobalTestFunction::standard().with_finite(
      2, PAdicTestFunction::indicator_units(2)));
  fs.push_back(GlobalTestFunction(ArchTestFunction::monomial_gaussian(2),
                                  {{3, PAdicTestFunction::indicator_ball(3, 1)}}));
  fs.push_back(GlobalTestFunction(
      ArchTestFunction::monomial_gaussian(1),
      {{2, PAdicTestFunction::from_unit_character(DirichletCharacter::kronecker(-4), 2)}}));
  return fs;
}

int suite_poisson(Reporter& rep, double tol) {
  if (tol <= 0.0) tol = 1e-10;
  std::mt19937 rng(97531u);
  std::uniform_real_distribution<double> lg(std::log(0.25), std::log(4.0));
  const auto fs = poisson_test_functions();
  int idx = 0;
  for (const auto& f : fs) {
    const GlobalTestFunction Ff = f.fourier();
    const ThetaEngine tf(f, nullptr), tFf(Ff, nullptr);
    const cdouble f0 = f.value_at_zero(), Ff0 = Ff.value_at_zero();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double g = std::exp(lg(rng));
      const cdouble lhs = tf.eval(g) - tFf.eval(1.0 / g) / g;
      const cdouble rhs = Ff0 / g - f0;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.line("poisson.delta identity, test function #" + std::to_string(idx++) + " (20 scales)",
             worst <= tol, worst, tol);
  }
  return rep.failures;
}

int suite_residues(Reporter& rep, double tol) {
  if (tol <= 0.0) tol = 1e-7;
  const GlobalTestFunction f = GlobalTestFunction::standard();
  const PolarData exact = residues(f);
  const PolarData num = residues_numeric(f);
  const double r1 = std::abs(num.residue_at_1 - exact.residue_at_1);
  const double r0 = std::abs(num.residue_at_0 - exact.residue_at_0);
  rep.line("residues.trivial residue at s=1 -> (Ff)(0) = 1", r1 <= tol, r1, tol);
  rep.line("residues.trivial residue at s=0 -> -f(0) = -1", r0 <= tol, r0, tol);

  // nontrivial component: bounded near 0 and 1, vanishing residues
  const CompletedLFunction L4 = standard_L(DirichletCharacter::kronecker(-4));
  double bound = 0.0, res = 0.0;
  for (const double h : {1e-3, 5e-4}) {
    bound = std::max({bound, std::abs(L4.evaluate(1.0 + h)), std::abs(L4.evaluate(cdouble(h)))});
    res = std::max(res, std::abs(h * L4.evaluate(1.0 + h)));
    res = std::max(res, std::abs(h * L4.evaluate(cdouble(h))));
  }
  rep.line("residues.chi_{-4} bounded near s in {0,1}", bound < 10.0, bound, 10.0);
  rep.line("residues.chi_{-4} vanishing residues", res <= 1e-2 * bound + tol, res,
           1e-2 * bound + tol);
  return rep.failures;
}

int suite_decompose(Reporter& rep, std::ostream& out, std::int64_t d, std::int64_t pmax) {
  const auto primes = primes_up_to(std::max<std::int64_t>(pmax, 2));
  out << "# p  splitting  E-factor(den)  F-product(den)  exact\n";
  int exact_count = 0;
  for (const std::int64_t p : primes) {
    const DecompositionCheck c = decomposition_identity(p, d);
    out << p << "  " << to_string(splitting_type(p, d)) << "  [";
    for (const auto& v : c.dedekind.den) out << v.real() << " ";
    out << "]  [";
    for (const auto& v : c.product.den) out << v.real() << " ";
    out << "]  " << (c.exact ? "yes" : "NO") << "\n";
    if (c.exact) ++exact_count;
  }
  const bool all = exact_count == static_cast<int>(primes.size());
  rep.line("decompose.d=" + std::to_string(d) + " Euler-factor identity, " +
               std::to_string(primes.size()) + " primes",
           all, static_cast<double>(primes.size() - exact_count), 0.0);

  // global partial products at s = 2
  const std::int64_t P = std::min<std::int64_t>(pmax, 10000);
  const auto ps = primes_up_to(P);
  double lhs = 1.0, rhs = 1.0;
  const DirichletCharacter eta = DirichletCharacter::kronecker(d);
  for (const std::int64_t p : ps) {
    const double X = 1.0 / (static_cast<double>(p) * static_cast<double>(p));
    lhs *= dedekind_euler_factor(p, d).eval_X(X).real();
    rhs *= 1.0 / (1.0 - X) * (1.0 / (1.0 - eta(p).real() * X));
  }
  const double tail = 4.0 / static_cast<double>(P);  // majorant of both relative tails
  const double diff = std::abs(lhs - rhs);
  rep.line("decompose.global zeta_E(2) vs zeta(2) L(2,eta) partial products to P=" +
               std::to_string(P),
           diff <= tail * (std::abs(lhs) + std::abs(rhs)), diff,
           tail * (std::abs(lhs) + std::abs(rhs)));

  // archimedean side via Legendre duplication
  double dup = 0.0;
  for (int k = 0; k < 10; ++k)
    dup = std::max(dup, gamma_duplication_check(cdouble(0.75 + 0.3 * k, 2.0 * k)));
  rep.line("decompose.archimedean duplication residual at 10 points", dup <= 1e-10, dup, 1e-10);
  return rep.failures;
}

int suite_generators(Reporter& rep, const std::vector<std::int64_t>& p_list) {
  for (const std::int64_t p : p_list) {
    const PAdicTestFunction img = generator_convolve(PAdicTestFunction::indicator_units(p));
    const bool ok = img.equals(PAdicTestFunction::indicator_zp(p), 0.0);
    rep.line("generators.p=" + std::to_string(p) + " convolution sends 1_{Z_p^x} to 1_{Z_p}",
             ok, ok ? 0.0 : 1.0, 0.0);
  }
  // distinguished-vector factor identity (1 - cX)(1 - cX)^{-1} = 1
  for (const cdouble c : {cdouble{1.0, 0.0}, cdouble{-1.0, 0.0}, cdouble{0.0, 1.0}}) {
    const auto [g, std_vec] = distinguished_decomposition(3);
    (void)std_vec;
    const EulerFactor lhs = local_zeta_symbolic_unramified(g, c);
    const EulerFactor rhs = local_zeta_symbolic_unramified(PAdicTestFunction::indicator_zp(3), c);
    const EulerFactor prod = lhs * rhs;
    const bool ok = prod.equals(EulerFactor::one(3), 0.0);
    rep.line("generators.distinguished factor identity, c = (" + std::to_string(c.real()) + "," +
                 std::to_string(c.imag()) + ")",
             ok, ok ? 0.0 : 1.0, 0.0);
  }
  // the standard archimedean multiplier acts by Gamma_R in the Mellin picture
  SampledVertical h{2.0, {0.0}, {cdouble{1.0, 0.0}}};
  const double r = std::abs(mellin_multiplier(h).values[0] - cdouble{1.0 / kPi, 0.0});
  rep.line("generators.arch multiplier h=1 at s=2 gives 1/pi", r <= 1e-14, r, 1e-14);
  return rep.failures;
}

int suite_growth(Reporter& rep, double sigma, double t_max) {
  const CompletedLFunction L0 = standard_L(DirichletCharacter::principal(1));
  const GrowthReport g0 = growth_report(L0, sigma, t_max);
  const double dev0 = std::abs(g0.fitted_rate + kPi / 4.0);
  rep.line("growth.trivial fitted rate -pi/4 (sigma=" + std::to_string(sigma) + ")",
           dev0 <= 0.02, dev0, 0.02);
  rep.line("growth.trivial gamma-stripped ratio in polynomial band", g0.ratio_in_poly_band,
           g0.ratio_in_poly_band ? 0.0 : 1.0, 0.0);

  const CompletedLFunction L4 = standard_L(DirichletCharacter::kronecker(-4));
  const GrowthReport g4 = growth_report(L4, sigma, t_max);
  const double dev4 = std::abs(g4.fitted_rate + kPi / 4.0);
  rep.line("growth.chi_{-4} fitted rate -pi/4", dev4 <= 0.02, dev4, 0.02);
  return rep.failures;
}

// ---------------------------------------------------------------------------
// eval / profile
// ---------------------------------------------------------------------------

int do_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.s_values.empty()) {
    err << "eval: no s values given (use --s)\n";
    return 2;
  }
  DirichletCharacter chi = parse_char_spec(cfg.char_spec);
  const CompletedLFunction L = standard_L(chi);

  // the grid is embarrassingly parallel; each slot traps its own domain
  // errors so the assembly below stays ordered and deterministic
  struct Slot {
    int kind = 0;  // 0 value, 1 pole, 2 divergence
    cdouble value{};
    double err_bound = 0.0;
    cdouble pole_loc{}, residue{};
    std::string what;
  };
  std::vector<Slot> slots;
  exec::fill_indexed(slots, cfg.s_values.size(), [&](std::size_t i) {
    const cdouble s = cfg.s_values[i];
    Slot slot;
    try {
      if (cfg.method == "euler") {
        const EulerResult r =
            zeta_euler(L.test_function(), {chi, s}, cfg.pmax > 0 ? cfg.pmax : 100000);
        slot.value = r.value;
        slot.err_bound = r.err_bound;
        if (cfg.strip_gamma) slot.value /= L.gamma_factor().evaluate(s);
      } else {
        slot.value = cfg.strip_gamma ? L.evaluate_stripped(s) : L.evaluate(s);
        slot.err_bound = 1e-11 * std::max(1.0, std::abs(slot.value));
      }
    } catch (const PoleError& e) {
      slot.kind = 1;
      slot.pole_loc = e.location;
      slot.residue = e.residue;
      slot.what = e.what();
    } catch (const ConvergenceError& e) {
      slot.kind = 2;
      slot.what = e.what();
    }
    return slot;
  });

  json rows = json::array();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& slot = slots[i];
    const cdouble s = cfg.s_values[i];
    if (slot.kind == 1) {
      rows.push_back({{"s", complex_to_json(s)},
                      {"pole", complex_to_json(slot.pole_loc)},
                      {"residue", complex_to_json(slot.residue)}});
      out << rows.dump(2) << "\n";
      err << "eval: " << slot.what << "\n";
      return 3;
    }
    if (slot.kind == 2) {
      err << "eval: " << slot.what << "\n";
      return 3;
    }
    rows.push_back({{"s", complex_to_json(s)},
                    {"value", complex_to_json(slot.value)},
                    {"err_bound", slot.err_bound},
                    {"method", cfg.method}});
  }
  if (cfg.format == "csv") {
    out << "re_s,im_s,re_value,im_value,err_bound,method\n";
    for (const auto& r : rows)
      out << r["s"][0].get<double>() << "," << r["s"][1].get<double>() << ","
          << r["value"][0].get<double>() << "," << r["value"][1].get<double>() << ","
          << r["err_bound"].get<double>() << "," << r["method"].get<std::string>() << "\n";
  } else {
    out << rows.dump(2) << "\n";
  }
  return 0;
}

int do_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.t_max < 10.0 || cfg.step <= 0.0) {
    err << "profile: empty or invalid grid (need t_max >= 10, step > 0)\n";
    return 2;
  }
  if (cfg.gamma_only) {
    const StirlingProfile sp = stirling_profile(cfg.sigma, cfg.t_max, cfg.step);
    out << "# gamma-only vertical profile, sigma=" << sp.sigma
        << " fitted_rate=" << sp.fitted_rate << " (target -pi/4 = " << -kPi / 4.0
        << "), max_deviation=" << sp.max_deviation << "\n";
    out << "t,log_abs,model,deviation\n";
    for (const auto& r : sp.rows)
      out << r.t << "," << r.log_abs << "," << r.model << "," << r.deviation << "\n";
    return 0;
  }
  DirichletCharacter chi = parse_char_spec(cfg.char_spec);
  const CompletedLFunction L = standard_L(chi);
  const GrowthReport rep = growth_report(L, cfg.sigma, cfg.t_max, cfg.step);

  if (cfg.format == "json") {
    auto lam = [&](cdouble s) {
      return s.real() >= L.params().series_sigma
                 ? L.gamma_factor().evaluate(s) * dirichlet_L(chi, s)
                 : L.evaluate(s);
    };
    const VerticalStripProfile prof =
        vertical_profile(lam, cfg.sigma, cfg.t_max, cfg.step, {0, 1, 3, 5});
    json j{{"sigma", cfg.sigma},
           {"fitted_rate", rep.fitted_rate},
           {"fitted_constant", rep.fitted_constant},
           {"ratio_log_min", rep.ratio_log_min},
           {"ratio_log_max", rep.ratio_log_max},
           {"seminorms", json::object()}};
    for (const auto& [n, v] : prof.seminorms) j["seminorms"][std::to_string(n)] = v;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "# vertical profile, sigma=" << cfg.sigma << " fitted_rate=" << rep.fitted_rate
      << " (target -pi/4 = " << -kPi / 4.0 << "), value_err_bound=1e-11\n";
  out << "t,re,im,log_abs,model\n";
  const double power = (cfg.sigma + static_cast<double>(L.epsilon()) - 1.0) / 2.0;
  for (std::size_t i = 0; i < rep.ts.size(); ++i) {
    const double t = rep.ts[i];
    const cdouble s{cfg.sigma, t};
    const cdouble v = cfg.sigma >= L.params().series_sigma
                          ? L.gamma_factor().evaluate(s) * dirichlet_L(chi, s)
                          : L.evaluate(s);
    const double model = rep.fitted_rate * t + power * std::log(t) + rep.fitted_constant;
    out << t << "," << v.real() << "," << v.imag() << "," << rep.log_abs[i] << "," << model
        << "\n";
  }
  return 0;
}

int do_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Reporter rep{out};
  if (cfg.suite == "fe")
    suite_fe(rep, cfg.tol);
  else if (cfg.suite == "poisson")
    suite_poisson(rep, cfg.tol);
  else if (cfg.suite == "residues")
    suite_residues(rep, cfg.tol);
  else if (cfg.suite == "decompose")
    suite_decompose(rep, out, cfg.d, cfg.pmax > 0 ? cfg.pmax : 229);
  else if (cfg.suite == "generators")
    suite_generators(rep, cfg.p_list);
  else if (cfg.suite == "growth")
    suite_growth(rep, cfg.sigma, cfg.t_max);
  else {
    err << "check: unknown suite '" << cfg.suite << "'\n";
    return 2;
  }
  return rep.failures == 0 ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// config plumbing
// ---------------------------------------------------------------------------

std::complex<double> parse_complex(const std::string& text) {
  std::string t;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("parse_complex: empty");
  if (t.back() == 'i' || t.back() == 'I') {
    t.pop_back();
    // split off the real part at the last +/- that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
      if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos)
      return {0.0, t.empty() || t == "+" ? 1.0 : (t == "-" ? -1.0 : std::stod(t))};
    const std::string re = t.substr(0, split);
    std::string im = t.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {std::stod(re), std::stod(im)};
  }
  return {std::stod(t), 0.0};
}

DirichletCharacter parse_char_spec(const std::string& spec) {
  if (spec == "trivial" || spec.empty()) return DirichletCharacter::principal(1);
  if (spec.rfind("d=", 0) == 0) return DirichletCharacter::kronecker(std::stoll(spec.substr(2)));
  if (spec.rfind("q=", 0) == 0) {
    const std::size_t comma = spec.find(',');
    if (comma == std::string::npos || spec.find("i=", comma) == std::string::npos)
      throw std::invalid_argument("character spec: expected q=<modulus>,i=<index>");
    const std::int64_t q = std::stoll(spec.substr(2, comma - 2));
    const std::size_t ipos = spec.find("i=", comma) + 2;
    const std::size_t idx = static_cast<std::size_t>(std::stoll(spec.substr(ipos)));
    const auto chars = DirichletCharacter::enumerate(q);
    if (idx >= chars.size())
      throw std::invalid_argument("character spec: index out of range (phi(q) characters)");
    return chars[idx].primitive_part();
  }
  throw std::invalid_argument("character spec: expected trivial | d=<disc> | q=<mod>,i=<idx>");
}

std::string RunConfig::to_json_string() const {
  json j{{"command", command}, {"char", char_spec},    {"suite", suite},
         {"sigma", sigma},     {"t_max", t_max},       {"step", step},
         {"strip_gamma", strip_gamma}, {"gamma_only", gamma_only},
         {"format", format},   {"out", out_path},      {"pmax", pmax},
         {"d", d},             {"p_list", p_list},     {"method", method},
         {"tol", tol},         {"threads", threads}};
  j["s"] = json::array();
  for (const auto& s : s_values) j["s"].push_back(complex_to_json(s));
  return j.dump();
}

RunConfig RunConfig::from_json_string(const std::string& text) {
  const json j = json::parse(text);
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.char_spec = j.at("char").get<std::string>();
  c.suite = j.at("suite").get<std::string>();
  c.sigma = j.at("sigma").get<double>();
  c.t_max = j.at("t_max").get<double>();
  c.step = j.at("step").get<double>();
  c.strip_gamma = j.at("strip_gamma").get<bool>();
  c.gamma_only = j.at("gamma_only").get<bool>();
  c.format = j.at("format").get<std::string>();
  c.out_path = j.at("out").get<std::string>();
  c.pmax = j.at("pmax").get<std::int64_t>();
  c.d = j.at("d").get<std::int64_t>();
  c.p_list = j.at("p_list").get<std::vector<std::int64_t>>();
  c.method = j.at("method").get<std::string>();
  c.tol = j.at("tol").get<double>();
  c.threads = j.at("threads").get<int>();
  for (const auto& s : j.at("s")) c.s_values.emplace_back(s[0].get<double>(), s[1].get<double>());
  return c;
}

// ---------------------------------------------------------------------------
// entry points
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"adelic zeta integrals for GL(1) over Q"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string s_list;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--char", cfg.char_spec, "character: trivial | d=<disc> | q=<mod>,i=<idx>");
    sub->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--threads", cfg.threads, "cap worker threads (also ADELE_ZETA_THREADS)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate Lambda(chi, s) on a grid");
  add_common(eval);
  eval->add_option("--s", s_list, "comma list of s values, e.g. 2 or 0.5+3i,0.5-3i");
  eval->add_flag("--strip-gamma", cfg.strip_gamma, "emit L(chi,s) instead of Lambda(chi,s)");
  eval->add_option("--pmax", cfg.pmax, "prime cutoff for --method euler");
  eval->add_option("--method", cfg.method, "continued | euler")
      ->check(CLI::IsMember({"continued", "euler"}));

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  add_common(check);
  check->add_option("suite", cfg.suite, "fe | poisson | residues | decompose | generators | growth")
      ->required();
  check->add_option("--d", cfg.d, "fundamental discriminant for decompose");
  check->add_option("--pmax", cfg.pmax, "prime bound for decompose");
  std::string p_list_str;
  check->add_option("--p", p_list_str, "comma list of primes for generators");
  check->add_option("--tol", cfg.tol, "tolerance override");
  check->add_option("--sigma", cfg.sigma, "vertical line for growth");
  check->add_option("--tmax", cfg.t_max, "top of the t range for growth");

  CLI::App* profile = app.add_subcommand("profile", "vertical-strip profile CSV/JSON");
  add_common(profile);
  profile->add_option("--sigma", cfg.sigma, "vertical line Re s");
  profile->add_option("--tmax", cfg.t_max, "top of the t range");
  profile->add_option("--step", cfg.step, "grid step");
  profile->add_flag("--gamma-only", cfg.gamma_only, "profile Gamma_R only (Stirling check)");

  std::vector<const char*> argv;
  argv.push_back("adele-zeta");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "config error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.threads > 0) exec::set_max_threads(cfg.threads);
  try {
    if (!s_list.empty()) {
      std::stringstream ss(s_list);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.s_values.push_back(parse_complex(tok));
    }
    if (!p_list_str.empty()) {
      cfg.p_list.clear();
      std::stringstream ss(p_list_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.p_list.push_back(std::stoll(tok));
    }
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "config error: cannot open output path " << cfg.out_path << "\n";
      return 2;
    }
    sink = &file;
  }
  sink->precision(17);  // numeric emission must round-trip

  try {
    if (eval->parsed()) {
      cfg.command = "eval";
      return do_eval(cfg, *sink, err);
    }
    if (check->parsed()) {
      cfg.command = "check";
      return do_check(cfg, *sink, err);
    }
    cfg.command = "profile";
    if (profile->count("--format") == 0) cfg.format = "csv";  // plot-ready by default
    return do_profile(cfg, *sink, err);
  } catch (const PoleError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace adele::cli
