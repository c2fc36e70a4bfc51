#include "latpoly/arith.hpp"

#include <sstream>

namespace latpoly {

Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = checked_neg(old_r);
    old_s = checked_neg(old_s);
    old_t = checked_neg(old_t);
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Int binomial(Int n, Int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    const __int128 next = static_cast<__int128>(result) * (n - k + i) / i;
    if (next > std::numeric_limits<Int>::max()) throw OverflowError("binomial coefficient overflow");
    result = static_cast<Int>(next);
  }
  return result;
}

Rational::Rational(Int n, Int d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  const Int g = gcd(n, d);
  num_ = g == 0 ? 0 : n / g;
  den_ = g == 0 ? 1 : d / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return {checked_add(a.num_, b.num_), a.den_};
  const Int g = gcd(a.den_, b.den_);
  const Int ad = a.den_ / g;
  const Int bd = b.den_ / g;
  return {checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, ad)), checked_mul(a.den_, bd)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const Int g1 = gcd(a.num_, b.den_);
  const Int g2 = gcd(b.num_, a.den_);
  const Int n1 = g1 == 0 ? a.num_ : a.num_ / g1;
  const Int d2 = g1 == 0 ? b.den_ : b.den_ / g1;
  const Int n2 = g2 == 0 ? b.num_ : b.num_ / g2;
  const Int d1 = g2 == 0 ? a.den_ : a.den_ / g2;
  return {checked_mul(n1, n2), checked_mul(d1, d2)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

}  // namespace latpoly
