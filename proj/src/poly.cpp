#include "fzeta/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "fzeta/kernels.hpp"

namespace fzeta {

namespace {
const Int kZero(0);
}

IntPoly::IntPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(long k, Int c) {
  if (k < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  if (c == 0) return {};
  std::vector<Int> v(static_cast<std::size_t>(k) + 1, Int(0));
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::of(std::initializer_list<long> coeffs) {
  std::vector<Int> v;
  v.reserve(coeffs.size());
  for (long x : coeffs) v.emplace_back(x);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::shifted(long k) const {
  if (k < 0) throw std::invalid_argument("shift amount must be >= 0");
  if (is_zero() || k == 0) return *this;
  std::vector<Int> v(static_cast<std::size_t>(k), Int(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::substitute_power(long n) const {
  if (n < 1) throw std::invalid_argument("power substitution requires n >= 1");
  if (is_zero() || n == 1) return *this;
  std::vector<Int> v(static_cast<std::size_t>(degree()) * n + 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * n] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::taylor_shift(const Int& c) const {
  // Horner on polynomials: p(q+c) = (...(c_d (q+c) + c_{d-1})(q+c) + ...).
  if (is_zero() || c == 0) return *this;
  IntPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    IntPoly next = acc.shifted(1);
    acc *= c;
    acc += next;
    acc += IntPoly(*it);
  }
  return acc;
}

Int IntPoly::max_abs_coeff() const {
  Int m(0);
  for (const auto& x : c_) {
    Int a = abs(x);
    if (a > m) m = std::move(a);
  }
  return m;
}

namespace {

using CoeffVec = std::vector<Int>;

// Schoolbook product on raw coefficient slices; out must be zeroed, sized
// na + nb - 1.
void school(const Int* a, std::size_t na, const Int* b, std::size_t nb,
            Int* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
}

constexpr std::size_t kKaratsubaCutoff = 64;

// Karatsuba on slices; out must be zeroed, sized na + nb - 1. Accumulates.
void karatsuba(const Int* a, std::size_t na, const Int* b, std::size_t nb,
               Int* out) {
  if (na == 0 || nb == 0) return;
  if (std::min(na, nb) < kKaratsubaCutoff) {
    school(a, na, b, nb, out);
    return;
  }
  const std::size_t h = std::min(na, nb) / 2;
  // a = a0 + x^h a1, b = b0 + x^h b1.
  const Int *a0 = a, *b0 = b;
  const std::size_t na0 = h, nb0 = h;
  const Int *a1 = a + h, *b1 = b + h;
  const std::size_t na1 = na - h, nb1 = nb - h;

  CoeffVec z0(na0 + nb0 - 1, Int(0));
  karatsuba(a0, na0, b0, nb0, z0.data());
  CoeffVec z2(na1 + nb1 - 1, Int(0));
  karatsuba(a1, na1, b1, nb1, z2.data());

  CoeffVec sa(std::max(na0, na1), Int(0));
  for (std::size_t i = 0; i < na0; ++i) sa[i] += a0[i];
  for (std::size_t i = 0; i < na1; ++i) sa[i] += a1[i];
  CoeffVec sb(std::max(nb0, nb1), Int(0));
  for (std::size_t i = 0; i < nb0; ++i) sb[i] += b0[i];
  for (std::size_t i = 0; i < nb1; ++i) sb[i] += b1[i];
  CoeffVec z1(sa.size() + sb.size() - 1, Int(0));
  karatsuba(sa.data(), sa.size(), sb.data(), sb.size(), z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
}

bool smallint_eligible(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  Int ma = a.max_abs_coeff(), mb = b.max_abs_coeff();
  if (!fits_i32(ma) || !fits_i32(mb)) return false;
  return kernels::conv_fits_i64(ma.get_ui(), mb.get_ui(), a.coeffs().size(),
                                b.coeffs().size());
}

IntPoly mul_smallint(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int32_t> va(a.coeffs().size()), vb(b.coeffs().size());
  for (std::size_t i = 0; i < va.size(); ++i)
    va[i] = static_cast<std::int32_t>(a.coeffs()[i].get_si());
  for (std::size_t i = 0; i < vb.size(); ++i)
    vb[i] = static_cast<std::int32_t>(b.coeffs()[i].get_si());
  std::vector<std::int64_t> out(va.size() + vb.size() - 1);
  kernels::conv_i32(va.data(), va.size(), vb.data(), vb.size(), out.data());
  CoeffVec c(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // mpz_class has no int64 constructor on LP64; long is 64-bit here.
    c[i] = Int(static_cast<long>(out[i]));
  }
  return IntPoly(std::move(c));
}

IntPoly mul_bignum(const IntPoly& a, const IntPoly& b, bool use_karatsuba) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  CoeffVec out(ca.size() + cb.size() - 1, Int(0));
  if (use_karatsuba)
    karatsuba(ca.data(), ca.size(), cb.data(), cb.size(), out.data());
  else
    school(ca.data(), ca.size(), cb.data(), cb.size(), out.data());
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly mul_with(const IntPoly& a, const IntPoly& b, MulStrategy s) {
  if (a.is_zero() || b.is_zero()) return {};
  switch (s) {
    case MulStrategy::smallint:
      if (!smallint_eligible(a, b))
        throw std::domain_error("operands exceed the small-coefficient bound");
      return mul_smallint(a, b);
    case MulStrategy::bignum_schoolbook:
      return mul_bignum(a, b, false);
    case MulStrategy::bignum_karatsuba:
      return mul_bignum(a, b, true);
    case MulStrategy::automatic:
      break;
  }
  if (smallint_eligible(a, b)) return mul_smallint(a, b);
  return mul_bignum(a, b,
                    std::min(a.coeffs().size(), b.coeffs().size()) >=
                        kKaratsubaCutoff);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  return mul_with(a, b, MulStrategy::automatic);
}

DivRem divrem_unit(const IntPoly& a, const IntPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const Int lead = d.lead();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument(
        "divisor must have leading coefficient +1 or -1, got " + to_dec(lead));
  const long dd = d.degree();
  std::vector<Int> rem(a.coeffs());
  if (a.degree() < dd) return {IntPoly(), a};
  std::vector<Int> quot(static_cast<std::size_t>(a.degree() - dd) + 1, Int(0));
  for (long k = a.degree(); k >= dd; --k) {
    Int& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Int f = (lead == 1) ? top : Int(-top);
    quot[static_cast<std::size_t>(k - dd)] = f;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= f * d.coeff(j);
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& d) {
  DivRem qr = divrem_unit(a, d);
  if (!qr.rem.is_zero())
    throw std::domain_error("division is not exact (nonzero remainder)");
  return qr.quot;
}

LaurentPoly::LaurentPoly(IntPoly u, long offset) : u_(std::move(u)), off_(offset) {
  if (u_.is_zero()) {
    off_ = 0;
    return;
  }
  long v = 0;
  while (u_.coeff(v) == 0) ++v;
  if (v > 0) {
    std::vector<Int> c(u_.coeffs().begin() + v, u_.coeffs().end());
    u_ = IntPoly(std::move(c));
    off_ += v;
  }
}

LaurentPoly LaurentPoly::monomial(long k, Int c) {
  if (c == 0) return {};
  return LaurentPoly(IntPoly(std::move(c)), k);
}

Int LaurentPoly::coeff(long k) const { return u_.coeff(k - off_); }

std::map<long, Int> LaurentPoly::terms() const {
  std::map<long, Int> t;
  for (long k = 0; k <= u_.degree(); ++k)
    if (u_.coeff(k) != 0) t[k + off_] = u_.coeff(k);
  return t;
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(-u_, off_); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long off = std::min(a.off_, b.off_);
  return LaurentPoly(a.u_.shifted(a.off_ - off) + b.u_.shifted(b.off_ - off),
                     off);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.u_ * b.u_, a.off_ + b.off_);
}

IntPoly LaurentPoly::as_polynomial() const {
  if (is_zero()) return {};
  if (off_ < 0)
    throw std::domain_error("Laurent polynomial has negative exponent " +
                            std::to_string(min_exp()));
  return u_.shifted(off_);
}

PowerSeriesTrunc::PowerSeriesTrunc(long order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  c_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

PowerSeriesTrunc::PowerSeriesTrunc(long order, const IntPoly& p)
    : PowerSeriesTrunc(order) {
  for (long k = 0; k <= std::min(order, p.degree()); ++k)
    c_[static_cast<std::size_t>(k)] = p.coeff(k);
}

const Int& PowerSeriesTrunc::coeff(long k) const {
  if (k < 0 || k > order_) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

void PowerSeriesTrunc::set_coeff(long k, Int v) {
  if (k < 0 || k > order_)
    throw std::out_of_range("series coefficient index out of range");
  c_[static_cast<std::size_t>(k)] = std::move(v);
}

IntPoly PowerSeriesTrunc::to_poly() const { return IntPoly(c_); }

namespace {
void require_same_order(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series truncation orders differ: " +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}
}  // namespace

PowerSeriesTrunc operator+(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) {
  require_same_order(a, b);
  PowerSeriesTrunc r(a.order());
  for (long k = 0; k <= a.order(); ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
  return r;
}

PowerSeriesTrunc operator-(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) {
  require_same_order(a, b);
  PowerSeriesTrunc r(a.order());
  for (long k = 0; k <= a.order(); ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
  return r;
}

PowerSeriesTrunc operator*(const PowerSeriesTrunc& a, const PowerSeriesTrunc& b) {
  require_same_order(a, b);
  PowerSeriesTrunc r(a.order());
  for (long i = 0; i <= a.order(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (long j = 0; i + j <= a.order(); ++j) {
      if (b.coeff(j) != 0) r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return r;
}

PowerSeriesTrunc series_inverse(const PowerSeriesTrunc& a) {
  const Int& a0 = a.coeff(0);
  if (a0 != 1 && a0 != -1)
    throw std::invalid_argument("series inverse requires constant term +1 or -1");
  PowerSeriesTrunc b(a.order());
  b.set_coeff(0, a0);  // 1/a0 = a0 for a0 = +-1
  for (long k = 1; k <= a.order(); ++k) {
    Int s(0);
    for (long i = 1; i <= k; ++i) s += a.coeff(i) * b.coeff(k - i);
    b.set_coeff(k, a0 == 1 ? Int(-s) : s);
  }
  return b;
}

}  // namespace fzeta
