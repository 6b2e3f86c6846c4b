#pragma once

#include <string_view>

#include "stabenv/factored_fraction.hpp"

namespace stabenv {

// Reads expressions such as "-1/((-h+a1-a2)(-h+a1-a3))" or "3*h^2 - 2 a1".
// Supports + - * / ^ (non-negative integer exponents), parentheses, integer
// literals and implicit multiplication. Identifiers must belong to vars.
FactoredFraction parse_fraction(std::string_view text, const VarSetPtr& vars);

RationalFunction parse_rational_function(std::string_view text, const VarSetPtr& vars);

// Throws ParseError if the expression has a non-constant denominator.
MultiPoly parse_poly(std::string_view text, const VarSetPtr& vars);

}  // namespace stabenv
