#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace latpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 64-bit intermediate left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input (dimension mismatch, bad parameters, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search gave up after exhausting its node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
  return -a;
}

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int gcd(Int a, Int b) { return std::gcd(checked_abs(a), checked_abs(b)); }

/// Floor division (rounds toward negative infinity); b != 0.
inline Int floor_div(Int a, Int b) {
  if (b == 0) throw InvalidArgument("division by zero");
  if (b == -1) return checked_neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  if (b == 0) throw InvalidArgument("division by zero");
  if (b == -1) return checked_neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Representative of a modulo m in [0, m); m > 0.
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Extended Euclid: returns g = gcd(a,b) >= 0 and sets x, y with a*x + b*y = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y);

/// Binomial coefficient C(n, k) with overflow checking; 0 when k < 0 or k > n or n < 0.
Int binomial(Int n, Int k);

/// Exact rational number num/den in lowest terms with den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const { return Rational(checked_neg(num_), den_, NoReduce{}); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Largest integer <= value.
  Int floor() const { return floor_div(num_, den_); }
  Int ceil() const { return ceil_div(num_, den_); }

  std::string to_string() const;

 private:
  struct NoReduce {};
  constexpr Rational(Int n, Int d, NoReduce) : num_(n), den_(d) {}

  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace latpoly
