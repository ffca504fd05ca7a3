#pragma once

#include "fzeta/poly.hpp"

namespace fzeta {

/// q-integer [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
IntPoly q_int(long n);

/// q-factorial [n]_q! = [1]_q [2]_q ... [n]_q.
IntPoly q_factorial(long n);

/// Gaussian binomial [n choose k]_q; zero for k < 0 or k > n.
IntPoly q_binomial(long n, long k);

/// (q - 1)(q^2 - 1) ... (q^m - 1); empty product 1 for m = 0.
IntPoly pochhammer_qminus(long m);

/// (1 - q)(1 - q^2) ... (1 - q^m); empty product 1 for m = 0.
IntPoly pochhammer_oneminus(long m);

}  // namespace fzeta
