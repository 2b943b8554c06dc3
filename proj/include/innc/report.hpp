#pragma once

// Structured (JSON) and human-readable renderings of computed objects.
// Rationals are written as "p/q" strings; key order is fixed.

#include "innc/charvariety.hpp"
#include "innc/covers.hpp"
#include "innc/koszul.hpp"
#include "innc/quasiadjunction.hpp"

#include <json.hpp>

#include <string>

namespace innc {

using Json = nlohmann::ordered_json;

/// "2x1 + 3x2 = 2", sign chosen so the first coefficient is positive.
std::string equation_string(const AffineForm &form);
/// "t1^2 t2^3 = 1" or "t1 = exp(2 pi i 1/5)".
std::string torus_equation_string(const TorusEquation &eq);
/// One-variable polynomial in t.
std::string univariate_string(const LaurentPolynomial &p);

Json to_json(const FaceOfQuasiadjunction &face);
Json to_json(const TranslatedSubtorus &torus);
Json to_json(const PrincipalComponent &comp);
Json to_json(const LaurentPolynomial &p);
Json to_json(const CharacterPoint &chi);
Json to_json(const BettiTable &table);
Json to_json(const CharPoly &charpoly);
Json to_json(const OracleRecord &record);

std::string human_face(const FaceOfQuasiadjunction &face, std::size_t index);
std::string human_component(const PrincipalComponent &comp, std::size_t index);
std::string human_table(const BettiTable &table);
std::string human_charpoly(const CharPoly &charpoly);

} // namespace innc
