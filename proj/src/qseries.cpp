#include "fzeta/qseries.hpp"

#include <stdexcept>

namespace fzeta {

IntPoly q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int requires n >= 0");
  std::vector<Int> c(static_cast<std::size_t>(n), Int(1));
  return IntPoly(std::move(c));
}

IntPoly q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
  IntPoly acc(Int(1));
  for (long k = 2; k <= n; ++k) acc *= q_int(k);
  return acc;
}

IntPoly q_binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("q_binomial requires n >= 0");
  if (k < 0 || k > n) return {};
  // [n k]_q = prod_{i=1}^{k} [n-k+i]_q / [i]_q, kept exact by dividing as we go.
  IntPoly acc(Int(1));
  for (long i = 1; i <= k; ++i) {
    acc *= q_int(n - k + i);
    acc = divide_exact(acc, q_int(i));
  }
  return acc;
}

IntPoly pochhammer_qminus(long m) {
  if (m < 0) throw std::invalid_argument("pochhammer requires m >= 0");
  IntPoly acc(Int(1));
  for (long k = 1; k <= m; ++k) {
    IntPoly f = IntPoly::monomial(k, Int(1));
    f += IntPoly(Int(-1));
    acc *= f;
  }
  return acc;
}

IntPoly pochhammer_oneminus(long m) {
  if (m < 0) throw std::invalid_argument("pochhammer requires m >= 0");
  IntPoly acc(Int(1));
  for (long k = 1; k <= m; ++k) {
    IntPoly f = IntPoly::monomial(k, Int(-1));
    f += IntPoly(Int(1));
    acc *= f;
  }
  return acc;
}

}  // namespace fzeta
