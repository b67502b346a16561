#pragma once

// JSON encodings of the wire-facing value types:
//   character:        { "modulus": q, "exponents": [...], "conductor": c, "parity": 0|1 }
//   character point:  character fields plus { "s": [re, im] }
//   p-adic function:  { "p": p, "M": M, "N": N, "values": [[re, im], ...] }
//   Euler factor:     { "p": p, "num": [[re, im], ...], "den": [[re, im], ...] }

#include <string>

#include "adele/characters.hpp"
#include "adele/padic.hpp"

namespace adele {

std::string to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const std::string& text);

std::string to_json(const HeckeCharacterPoint& x);
HeckeCharacterPoint point_from_json(const std::string& text);

std::string to_json(const PAdicTestFunction& f);
PAdicTestFunction padic_from_json(const std::string& text);

std::string to_json(const EulerFactor& f);
EulerFactor euler_factor_from_json(const std::string& text);

}  // namespace adele
