#include "fzeta/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fzeta {

RootOfUnity::RootOfUnity(long order_, long numer_) : order(order_), numer(numer_) {
  if (order < 1) throw std::invalid_argument("root order must be >= 1");
  if (numer < 1 || numer > order || std::gcd(numer, order) != 1)
    throw std::invalid_argument("root numerator must be in [1, order] and "
                                "coprime to the order");
}

namespace {

std::mutex g_cyclo_mutex;
std::map<long, IntPoly> g_cyclo_cache;
long g_cyclo_bound = 512;

IntPoly compute_cyclotomic(long n) {
  // (q^n - 1) / prod of proper-divisor cyclotomics; recursion depth is the
  // number of prime factors.
  std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  IntPoly acc{IntPoly(std::move(num))};
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) acc = divide_exact(acc, cyclotomic(d));
  }
  return acc;
}

}  // namespace

IntPoly cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  if (n == 1) return IntPoly::of({-1, 1});
  {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
  }
  IntPoly result = compute_cyclotomic(n);
  if (n <= g_cyclo_bound) {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    g_cyclo_cache.emplace(n, result);
  }
  return result;
}

void set_cyclotomic_cache_bound(long bound) {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  g_cyclo_bound = bound;
  for (auto it = g_cyclo_cache.begin(); it != g_cyclo_cache.end();) {
    if (it->first > bound)
      it = g_cyclo_cache.erase(it);
    else
      ++it;
  }
}

long cyclotomic_cache_bound() {
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return g_cyclo_bound;
}

CyclotomicInt::CyclotomicInt(long order, const IntPoly& value) : order_(order) {
  if (order < 1) throw std::invalid_argument("root order must be >= 1");
  residue_ = divrem_unit(value, cyclotomic(order)).rem;
}

Int CyclotomicInt::as_integer() const {
  if (residue_.degree() > 0)
    throw std::domain_error("cyclotomic integer is not rational");
  return residue_.coeff(0);
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("cyclotomic orders differ");
  return CyclotomicInt(a.order_, a.residue_ + b.residue_);
}

CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("cyclotomic orders differ");
  return CyclotomicInt(a.order_, a.residue_ - b.residue_);
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("cyclotomic orders differ");
  return CyclotomicInt(a.order_, a.residue_ * b.residue_);
}

CyclotomicInt CyclotomicInt::operator-() const {
  return CyclotomicInt(order_, -residue_);
}

std::complex<double> CyclotomicInt::complex_value() const {
  const double tau = 2.0 * std::acos(-1.0);
  std::complex<double> w = std::polar(1.0, tau / static_cast<double>(order_));
  std::complex<double> acc(0.0, 0.0);
  for (long k = residue_.degree(); k >= 0; --k)
    acc = acc * w + std::complex<double>(residue_.coeff(k).get_d(), 0.0);
  return acc;
}

namespace {

CyclotomicInt eval_root_terms(const std::map<long, Int>& terms,
                              const RootOfUnity& z) {
  std::vector<Int> folded(static_cast<std::size_t>(z.order), Int(0));
  for (const auto& [e, c] : terms) {
    long r = ((e % z.order) + z.order) % z.order;
    r = (r * z.numer) % z.order;  // q^e -> x^(e*numer), exponent mod order
    folded[static_cast<std::size_t>(r)] += c;
  }
  return CyclotomicInt(z.order, IntPoly(std::move(folded)));
}

}  // namespace

CyclotomicInt eval_root(const IntPoly& p, const RootOfUnity& z) {
  std::map<long, Int> terms;
  for (long k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) terms[k] = p.coeff(k);
  return eval_root_terms(terms, z);
}

CyclotomicInt eval_root(const LaurentPoly& p, const RootOfUnity& z) {
  return eval_root_terms(p.terms(), z);
}

}  // namespace fzeta
