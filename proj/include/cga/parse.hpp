#pragma once
/*
 * parse.hpp
 * ---------
 * Text format for polynomial values and degree windows.
 *
 * Grammar (whitespace is insignificant between tokens):
 *
 *   expr     := ['-'] term (('+'|'-') term)*
 *   term     := rational | [rational '*'] factor ('*' factor)*
 *   factor   := NAME ('^' UINT)?
 *   rational := UINT ['/' UINT]
 *   NAME     := [A-Za-z_][A-Za-z0-9_]*
 *
 * Example: "v4^2 - 3/2*w3*w3p + 1".  Names must be generators of the ambient
 * algebra; the square of an odd generator denotes zero and is accepted.
 */

#include <string>

#include "cga/core.hpp"

namespace cga {

// Inclusive degree range for reports.
struct DegreeWindow {
    int lo = 1;
    int hi = 1;
};

// Parses an expression over the given algebra. Throws parse_error with a
// character position on malformed input or unknown generator names.
Polynomial parse_polynomial(AlgebraPtr algebra, const std::string& text);

// Parses "LO:HI" with 1 <= LO <= HI. Throws parse_error otherwise.
DegreeWindow parse_window(const std::string& text);

}  // namespace cga
