#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fzeta {

/// Raised when a brute-force sweep would exceed the enumeration budget.
struct OracleBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration budget for the brute-force counters (number of candidate
/// objects considered).
inline constexpr std::uint64_t kOracleBudget = 100000000;  // 1e8

/// Primes accepted by the oracles.
bool oracle_prime(long p);

/// |GL_m(F_p)| by enumerating all m x m matrices and testing invertibility
/// with Gaussian elimination mod p.
std::uint64_t count_gl(int m, long p);

/// Number of d x d matrices X over F_p with X^T A X = A (A given as a d x d
/// integer matrix, reduced mod p). The Carlitz sphere count E_m(p) is the
/// case of the standard alternating form of size 2m.
std::uint64_t count_matrix_equation(const std::vector<std::vector<long>>& a,
                                    long p);

/// The standard alternating form J of size 2m (block antidiagonal +-1).
std::vector<std::vector<long>> alternating_form(int m);
/// The identity form of size d (for symmetric-form comparison counts).
std::vector<std::vector<long>> identity_form(int d);

/// #P^n(F_p) by enumerating canonical representatives.
std::uint64_t count_projective(int n, long p);

/// Number of j-dimensional subspaces of F_p^n, enumerating reduced
/// row-echelon forms (pivot columns plus free entries).
std::uint64_t count_grassmannian(int n, int j, long p);

/// Same count by sweeping all j x n matrices and collecting distinct row
/// spaces (canonicalized); only feasible for tiny inputs. Used to validate
/// the echelon enumeration.
std::uint64_t count_grassmannian_bruteforce(int n, int j, long p);

}  // namespace fzeta
