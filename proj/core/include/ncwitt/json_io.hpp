#pragma once

#include <nlohmann/json.hpp>

#include "ncwitt/free_poly.hpp"
#include "ncwitt/ghost.hpp"
#include "ncwitt/matrix.hpp"
#include "ncwitt/necklace.hpp"

namespace ncwitt {

using json = nlohmann::ordered_json;

/// Conventions shared by the CLI and the verification reports: coefficients
/// as decimal strings (arbitrary precision), words as generator-name strings
/// joined by '*' ("1" for the empty word), term objects in degree-then-lex
/// order.

json terms_to_json(const FreePoly& f);
json terms_to_json(const NecklacePoly& f);
json ghost_to_json(const GhostVector& g);

json matrix_to_json(const Matrix& m);
json modulus_to_json(const CoefficientRing& ring); // "int" or the modulus

/// Reads {"dimension": d, "modulus": m|"int", "assign": {"X": [[...]], ...}}.
/// Generators are the assign keys in sorted order; entries may be JSON
/// integers or decimal strings.
MatrixAssignment assignment_from_json(const nlohmann::json& doc);

mpz_class mpz_from_json(const nlohmann::json& v);

} // namespace ncwitt
