#include "fzeta/tateroot.hpp"

#include <numeric>
#include <stdexcept>

#include "fzeta/polyio.hpp"

namespace fzeta {

NoF1StructureError::NoF1StructureError(long exp, Int coeff)
    : std::domain_error("no F1-structure: coefficient of L^" +
                        std::to_string(exp) + " is " + to_dec(coeff)),
      exponent(exp),
      coefficient(std::move(coeff)) {}

namespace {

// Scales every exponent of a Laurent polynomial by s >= 1.
LaurentPoly stretch(const LaurentPoly& v, long s) {
  if (s == 1 || v.is_zero()) return v;
  return LaurentPoly(v.unit_part().substitute_power(s), v.offset() * s);
}

// Divides every exponent by g (all exponents must be multiples of g).
LaurentPoly contract(const LaurentPoly& v, long g) {
  if (g == 1 || v.is_zero()) return v;
  std::vector<Int> c(static_cast<std::size_t>(v.unit_part().degree() / g) + 1,
                     Int(0));
  for (long k = 0; k <= v.unit_part().degree(); ++k) {
    const Int& x = v.unit_part().coeff(k);
    if (x == 0) continue;
    if (k % g != 0) throw std::logic_error("exponent not divisible in contract");
    c[static_cast<std::size_t>(k / g)] = x;
  }
  return LaurentPoly(IntPoly(std::move(c)), v.offset() / g);
}

}  // namespace

TateRootClass::TateRootClass(long root_order, LaurentPoly value)
    : order_(root_order), value_(std::move(value)) {
  if (order_ < 1) throw std::invalid_argument("root order must be >= 1");
  if (value_.is_zero()) {
    order_ = 1;
    return;
  }
  long g = order_;
  for (const auto& [k, c] : value_.terms()) g = std::gcd(g, k);
  if (g > 1) {
    value_ = contract(value_, g);
    order_ /= g;
  }
}

TateRootClass operator+(const TateRootClass& a, const TateRootClass& b) {
  const long m = std::lcm(a.order_, b.order_);
  return TateRootClass(m, stretch(a.value_, m / a.order_) +
                              stretch(b.value_, m / b.order_));
}

TateRootClass operator*(const TateRootClass& a, const TateRootClass& b) {
  const long m = std::lcm(a.order_, b.order_);
  return TateRootClass(m, stretch(a.value_, m / a.order_) *
                              stretch(b.value_, m / b.order_));
}

TateRootClass tate_root(const GrothClass& c, long n) {
  if (n < 1) throw std::invalid_argument("root order must be >= 1");
  for (const auto& [k, coeff] : c.value().terms())
    if (coeff < 0) throw NoF1StructureError(k, coeff);
  // coefficient of L^k moves to t^k = L^(k/n)
  return TateRootClass(n, c.value());
}

IntegralityResult is_integral(const TateRootClass& c) {
  for (const auto& [k, coeff] : c.value().terms()) {
    (void)coeff;
    if (((k % c.root_order()) + c.root_order()) % c.root_order() != 0)
      return {false, k};
  }
  return {true, std::nullopt};
}

GrothClass to_groth(const TateRootClass& c) {
  IntegralityResult ir = is_integral(c);
  if (!ir.integral)
    throw std::domain_error("class has fractional exponent " +
                            std::to_string(*ir.fractional_exponent) + "/" +
                            std::to_string(c.root_order()));
  return GrothClass(contract(c.value(), c.root_order()));
}

OrbitClass::OrbitClass(long modulus, const IntPoly& value) : modulus_(modulus) {
  if (modulus < 1) throw std::invalid_argument("orbit modulus must be >= 1");
  std::vector<Int> folded(static_cast<std::size_t>(modulus), Int(0));
  for (long k = 0; k <= value.degree(); ++k)
    folded[static_cast<std::size_t>(k % modulus)] += value.coeff(k);
  value_ = IntPoly(std::move(folded));
}

OrbitClass operator+(const OrbitClass& a, const OrbitClass& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("orbit moduli differ");
  return OrbitClass(a.modulus_, a.value_ + b.value_);
}

OrbitClass operator*(const OrbitClass& a, const OrbitClass& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("orbit moduli differ");
  return OrbitClass(a.modulus_, a.value_ * b.value_);
}

OrbitClass orbit_reduce(const GrothClass& c, long period) {
  if (period < 1) throw std::invalid_argument("orbit period must be >= 1");
  std::vector<Int> folded(static_cast<std::size_t>(period), Int(0));
  for (const auto& [k, coeff] : c.value().terms())
    folded[static_cast<std::size_t>(((k % period) + period) % period)] += coeff;
  return OrbitClass(period, IntPoly(std::move(folded)));
}

TateRootClass rescale(const TateRootClass& a, long num, long den) {
  if (num < 1 || den < 1)
    throw std::invalid_argument("rescaling exponent must be a positive rational");
  // L^(k/order) -> L^(k num / (order den)).
  return TateRootClass(a.root_order() * den, stretch(a.value(), num));
}

TateRootClass rational_power_mul(const TateRootClass& a, const TateRootClass& b) {
  return a * b;
}

}  // namespace fzeta
