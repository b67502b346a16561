#include "adele/json_io.hpp"

#include <json.hpp>

namespace adele {

namespace {

using nlohmann::json;

json complex_array(const std::vector<std::complex<double>>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

std::vector<std::complex<double>> complex_vector(const json& j) {
  std::vector<std::complex<double>> out;
  for (const auto& z : j) out.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  return out;
}

json character_json(const DirichletCharacter& chi) {
  return json{{"modulus", chi.modulus()},
              {"exponents", chi.exponents()},
              {"conductor", chi.conductor()},
              {"parity", chi.parity()}};
}

DirichletCharacter character_from(const json& j) {
  DirichletCharacter chi = DirichletCharacter::from_exponents(
      j.at("modulus").get<std::int64_t>(), j.at("exponents").get<std::vector<std::int64_t>>());
  if (j.contains("conductor") && j.at("conductor").get<std::int64_t>() != chi.conductor())
    throw std::invalid_argument("character JSON: stored conductor disagrees with the data");
  if (j.contains("parity") && j.at("parity").get<int>() != chi.parity())
    throw std::invalid_argument("character JSON: stored parity disagrees with the data");
  return chi;
}

}  // namespace

std::string to_json(const DirichletCharacter& chi) { return character_json(chi).dump(); }

DirichletCharacter character_from_json(const std::string& text) {
  return character_from(json::parse(text));
}

std::string to_json(const HeckeCharacterPoint& x) {
  json j = character_json(x.finite);
  j["s"] = {x.s.real(), x.s.imag()};
  return j.dump();
}

HeckeCharacterPoint point_from_json(const std::string& text) {
  const json j = json::parse(text);
  return {character_from(j),
          {j.at("s").at(0).get<double>(), j.at("s").at(1).get<double>()}};
}

std::string to_json(const PAdicTestFunction& f) {
  return json{{"p", f.prime()},
              {"M", f.outer_exp()},
              {"N", f.smoothness_exp()},
              {"values", complex_array(f.values())}}
      .dump();
}

PAdicTestFunction padic_from_json(const std::string& text) {
  const json j = json::parse(text);
  return PAdicTestFunction(j.at("p").get<std::int64_t>(), j.at("M").get<int>(),
                           j.at("N").get<int>(), complex_vector(j.at("values")));
}

std::string to_json(const EulerFactor& f) {
  return json{{"p", f.p}, {"num", complex_array(f.num)}, {"den", complex_array(f.den)}}.dump();
}

EulerFactor euler_factor_from_json(const std::string& text) {
  const json j = json::parse(text);
  EulerFactor f;
  f.p = j.at("p").get<std::int64_t>();
  f.num = complex_vector(j.at("num"));
  f.den = complex_vector(j.at("den"));
  if (f.den.empty() || f.den[0] == std::complex<double>{0.0, 0.0})
    throw std::invalid_argument("EulerFactor JSON: denominator constant term must be nonzero");
  return f;
}

}  // namespace adele
