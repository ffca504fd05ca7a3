#include "fzeta/fforacle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace fzeta {

bool oracle_prime(long p) {
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L})
    if (p == q) return true;
  return false;
}

namespace {

void require_prime(long p) {
  if (!oracle_prime(p))
    throw std::invalid_argument("oracle supports primes up to 13, got " +
                                std::to_string(p));
}

void require_budget(long double candidates, const std::string& what) {
  if (candidates > static_cast<long double>(kOracleBudget))
    throw OracleBudgetError(what + " sweep exceeds the enumeration budget");
}

using Mat = std::vector<std::vector<long>>;

long mod_pow(long base, long exp, long p) {
  long r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

// Rank by Gaussian elimination mod p; destroys its argument.
int rank_mod_p(Mat m, long p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const long inv = mod_inv(m[rank][c], p);
    for (int cc = c; cc < cols; ++cc)
      m[rank][cc] = ((m[rank][cc] % p) * inv % p + p) % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long f = ((m[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Unrank a base-p digit string into a d1 x d2 matrix.
Mat unrank_matrix(std::uint64_t idx, int d1, int d2, long p) {
  Mat m(static_cast<std::size_t>(d1),
        std::vector<long>(static_cast<std::size_t>(d2), 0));
  for (int r = 0; r < d1; ++r)
    for (int c = 0; c < d2; ++c) {
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          static_cast<long>(idx % static_cast<std::uint64_t>(p));
      idx /= static_cast<std::uint64_t>(p);
    }
  return m;
}

std::uint64_t int_pow(long p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(p);
  return r;
}

}  // namespace

std::uint64_t count_gl(int m, long p) {
  require_prime(p);
  if (m < 0) throw std::invalid_argument("matrix size must be >= 0");
  if (m == 0) return 1;  // the empty matrix
  require_budget(std::pow(static_cast<long double>(p), m * m), "GL");
  const std::uint64_t total = int_pow(p, m * m);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (rank_mod_p(unrank_matrix(idx, m, m, p), p) == m) ++count;
  }
  return count;
}

std::uint64_t count_matrix_equation(const Mat& a, long p) {
  require_prime(p);
  const int d = static_cast<int>(a.size());
  if (d == 0) throw std::invalid_argument("form matrix is empty");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("form matrix must be square");
  if (rank_mod_p(a, p) != d)
    throw std::invalid_argument("form matrix is singular mod p");
  require_budget(std::pow(static_cast<long double>(p), d * d),
                 "matrix-equation");
  const std::uint64_t total = int_pow(p, d * d);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Mat x = unrank_matrix(idx, d, d, p);
    // axa = X^T A X mod p
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        long s = 0;
        for (int r = 0; r < d; ++r) {
          if (x[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] == 0)
            continue;
          long inner = 0;
          for (int c = 0; c < d; ++c)
            inner += a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                     x[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] % p;
          s += x[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] *
               (inner % p) % p;
        }
        const long want = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (((s - want) % p + p) % p != 0) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

Mat alternating_form(int m) {
  if (m < 1) throw std::invalid_argument("form index must be >= 1");
  const int d = 2 * m;
  Mat a(static_cast<std::size_t>(d), std::vector<long>(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < m; ++i) {
    a[static_cast<std::size_t>(2 * i)][static_cast<std::size_t>(2 * i + 1)] = 1;
    a[static_cast<std::size_t>(2 * i + 1)][static_cast<std::size_t>(2 * i)] = -1;
  }
  return a;
}

Mat identity_form(int d) {
  if (d < 1) throw std::invalid_argument("form size must be >= 1");
  Mat a(static_cast<std::size_t>(d), std::vector<long>(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i)
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return a;
}

std::uint64_t count_projective(int n, long p) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("projective dimension must be >= 0");
  require_budget(std::pow(static_cast<long double>(p), n + 1), "projective");
  // Canonical representative per line: first nonzero coordinate equal to 1.
  const std::uint64_t total = int_pow(p, n + 1);
  std::uint64_t count = 0;
  std::vector<long> v(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (auto& x : v) {
      x = static_cast<long>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
    long first = 0;
    for (const long x : v)
      if (x != 0) {
        first = x;
        break;
      }
    if (first == 1) ++count;
  }
  return count;
}

std::uint64_t count_grassmannian(int n, int j, long p) {
  require_prime(p);
  if (n < 0 || j < 0) throw std::invalid_argument("dimensions must be >= 0");
  if (j > n) return 0;
  if (j == 0) return 1;
  // Enumerate reduced row-echelon forms: choose pivot columns, then sweep the
  // free entries (positions right of a pivot and not in a pivot column).
  std::vector<int> pivots(static_cast<std::size_t>(j));
  for (int i = 0; i < j; ++i) pivots[static_cast<std::size_t>(i)] = i;
  std::uint64_t count = 0;
  long double projected = 0;
  // First pass: compute the total work for the budget check.
  {
    std::vector<int> pv = pivots;
    bool more = true;
    while (more) {
      int free_cells = 0;
      for (int r = 0; r < j; ++r)
        for (int c = pv[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
          bool is_pivot = std::find(pv.begin(), pv.end(), c) != pv.end();
          if (!is_pivot) ++free_cells;
        }
      projected += std::pow(static_cast<long double>(p), free_cells);
      // next combination
      more = false;
      for (int i = j - 1; i >= 0; --i) {
        if (pv[static_cast<std::size_t>(i)] < n - (j - i)) {
          ++pv[static_cast<std::size_t>(i)];
          for (int k = i + 1; k < j; ++k)
            pv[static_cast<std::size_t>(k)] = pv[static_cast<std::size_t>(k - 1)] + 1;
          more = true;
          break;
        }
      }
    }
  }
  require_budget(projected, "grassmannian");

  bool more = true;
  while (more) {
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < j; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
        bool is_pivot =
            std::find(pivots.begin(), pivots.end(), c) != pivots.end();
        if (!is_pivot) free_pos.emplace_back(r, c);
      }
    const std::uint64_t fills = int_pow(p, static_cast<int>(free_pos.size()));
    for (std::uint64_t idx = 0; idx < fills; ++idx) {
      // Build the echelon matrix: identity at pivots, digits of idx at the
      // free cells. Every such matrix is a distinct RREF, hence a distinct
      // subspace; construct it and sanity-check the pivot structure.
      Mat m(static_cast<std::size_t>(j),
            std::vector<long>(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < j; ++r)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(
            pivots[static_cast<std::size_t>(r)])] = 1;
      std::uint64_t t = idx;
      for (const auto& [r, c] : free_pos) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            static_cast<long>(t % static_cast<std::uint64_t>(p));
        t /= static_cast<std::uint64_t>(p);
      }
      if (rank_mod_p(m, p) != j)
        throw std::logic_error("echelon matrix lost rank");  // cannot happen
      ++count;
    }
    more = false;
    for (int i = j - 1; i >= 0; --i) {
      if (pivots[static_cast<std::size_t>(i)] < n - (j - i)) {
        ++pivots[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < j; ++k)
          pivots[static_cast<std::size_t>(k)] =
              pivots[static_cast<std::size_t>(k - 1)] + 1;
        more = true;
        break;
      }
    }
  }
  return count;
}

std::uint64_t count_grassmannian_bruteforce(int n, int j, long p) {
  require_prime(p);
  if (n < 0 || j < 0) throw std::invalid_argument("dimensions must be >= 0");
  if (j > n) return 0;
  if (j == 0) return 1;
  require_budget(std::pow(static_cast<long double>(p), j * n),
                 "grassmannian full");
  const std::uint64_t total = int_pow(p, j * n);
  std::set<Mat> spaces;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat m = unrank_matrix(idx, j, n, p);
    Mat reduced = m;
    if (rank_mod_p(m, p) != j) continue;
    // Canonical form: full row reduction of `reduced`.
    int rank = 0;
    for (int c = 0; c < n && rank < j; ++c) {
      int pivot = -1;
      for (int r = rank; r < j; ++r)
        if (reduced[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % p != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(reduced[static_cast<std::size_t>(rank)],
                reduced[static_cast<std::size_t>(pivot)]);
      const long inv = mod_inv(
          reduced[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], p);
      for (int cc = 0; cc < n; ++cc)
        reduced[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] =
            ((reduced[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] %
              p) * inv % p + p) % p;
      for (int r = 0; r < j; ++r) {
        if (r == rank) continue;
        const long f =
            ((reduced[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % p) +
             p) % p;
        if (f == 0) continue;
        for (int cc = 0; cc < n; ++cc)
          reduced[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
              ((reduced[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -
                f * reduced[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]) %
                   p + p) % p;
      }
      ++rank;
    }
    spaces.insert(reduced);
  }
  return spaces.size();
}

}  // namespace fzeta
