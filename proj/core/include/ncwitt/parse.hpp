#pragma once

#include <string_view>

#include "ncwitt/free_poly.hpp"

namespace ncwitt {

/// Parses an expression into canonical form.
///
/// Grammar: identifiers are generator names; integer literals in decimal;
/// operators `+ - * ^` with `^` binding tightest (the exponent must be a
/// nonnegative integer literal), then unary minus, then `*`, then binary
/// `+ -`; parentheses; whitespace ignored. Juxtaposition is NOT
/// multiplication: `X*Y`, never `XY`.
///
/// Throws ParseError (with position) on bad syntax, unknown generators and
/// negative exponents.
FreePoly parse(std::string_view text, GeneratorSetPtr gens, CoefficientRing ring);

} // namespace ncwitt
