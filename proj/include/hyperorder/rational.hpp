#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hyperorder {

using BigInt = mpz_class;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. Division by
/// zero throws ArithmeticError instead of trapping.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}
  Rational(const BigInt& value) : q_(value) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" with optional sign and surrounding blanks.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.q_, rhs.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.q_, rhs.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return q_.get_d(); }

  /// Floor as a big integer.
  BigInt floor() const;

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);

/// If `value` is the square of a rational, store the nonnegative root.
bool rational_sqrt(const Rational& value, Rational& root);

BigInt factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hyperorder
