#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fzeta {

/// Arbitrary-precision integer used for all exact coefficient arithmetic.
using Int = mpz_class;

inline std::string to_dec(const Int& v) { return v.get_str(10); }

/// Parses a base-10 integer (optional leading '-'). Throws std::invalid_argument
/// on malformed input.
inline Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return v;
}

inline int sign_of(const Int& v) { return sgn(v); }

/// True if v fits in a signed 32-bit lane of the fast convolution path.
inline bool fits_i32(const Int& v) {
  return v.fits_sint_p() && v >= -2147483647 && v <= 2147483647;
}

}  // namespace fzeta
