#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperorder/rational.hpp"

namespace hyperorder {

/// Dense univariate polynomial in k over Q, coefficients in ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);
  template <std::signed_integral T>
  Poly(T constant) : Poly(Rational(constant)) {}
  explicit Poly(std::vector<Rational> ascending);

  /// The indeterminate k.
  static Poly var();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of k^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& lead() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& k) const;
  /// p(k + h).
  Poly shifted(const Rational& h) const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// "9*k^2 - 3*k + 18" style, highest degree first.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws ArithmeticError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
/// Exact division, throws if the remainder is nonzero.
Poly exact_div(const Poly& num, const Poly& den);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& lhs, const Poly& rhs);
Rational resultant(const Poly& lhs, const Poly& rhs);
/// Unique polynomial of degree < xs.size() through the given points.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);
/// Nonnegative integer roots in ascending order; the polynomial must be nonzero.
std::vector<BigInt> nonnegative_integer_roots(const Poly& p);
/// Largest rational c with p/c having coprime integer coefficients and a
/// positive leading coefficient.
Rational content(const Poly& p);

/// Reduced ratio of polynomials in k: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly num);
  template <std::signed_integral T>
  RatFunc(T constant) : RatFunc(Poly(constant)) {}
  RatFunc(Poly num, Poly den);

  /// Parses an arithmetic expression in k: integers, k, + - * / ^, parentheses.
  static RatFunc parse(std::string_view text);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool has_pole_at(const Rational& k) const { return den_(k).is_zero(); }
  /// Throws ArithmeticError at a pole.
  Rational operator()(const Rational& k) const;
  RatFunc shifted(const Rational& h) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

  /// "(num)/(den)" with the monic denominator, or just the numerator.
  std::string to_string() const;
  /// Integer-content form such as "-(3*k^2 - k + 6)/(4*(k + 1))".
  std::string to_pretty_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace hyperorder
