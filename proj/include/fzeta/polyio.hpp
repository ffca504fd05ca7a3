#pragma once

#include <string>

#include "fzeta/poly.hpp"

namespace fzeta {

/// Text format for polynomials:
///   sparse  "k:c;k:c;..."   exponent:coefficient pairs, any order
///   dense   "c0,c1,c2,..."  coefficients from degree 0 up
/// Coefficients are decimal big integers. A bare integer is a constant.
/// Sparse exponents may be negative only in the Laurent parser.
/// Throws std::invalid_argument on malformed input.
IntPoly parse_poly(const std::string& text);
LaurentPoly parse_laurent(const std::string& text);

/// Canonical sparse form, exponents ascending ("0:0" for zero).
std::string format_poly(const IntPoly& p);
std::string format_laurent(const LaurentPoly& p);

/// Human-oriented form like "q^4 - q^3 + 2" (variable name configurable).
std::string pretty_poly(const IntPoly& p, const std::string& var = "q");
std::string pretty_laurent(const LaurentPoly& p, const std::string& var = "q");

}  // namespace fzeta
