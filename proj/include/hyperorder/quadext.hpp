#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hyperorder/rational.hpp"

namespace hyperorder {

/// Radicand D of a quadratic extension Q(sqrt(D)).
///
/// Perfect-square radicands are flagged so that elements built over them can
/// fold sqrt(D) into their rational part.
class Discriminant {
 public:
  /// The trivial extension (D = 1), used for plain rationals.
  Discriminant() : Discriminant(Rational(1)) {}
  explicit Discriminant(Rational radicand);

  const Rational& radicand() const { return radicand_; }
  bool is_square() const { return is_square_; }
  /// sqrt(D); only meaningful when is_square().
  const Rational& root() const { return root_; }

  friend bool operator==(const Discriminant& lhs, const Discriminant& rhs) {
    return lhs.radicand_ == rhs.radicand_;
  }

 private:
  Rational radicand_;
  Rational root_;
  bool is_square_ = false;
};

/// Element a + b*sqrt(D) of Q(sqrt(D)).
///
/// Values over different non-square radicands cannot be combined; an element
/// whose radicand is a perfect square is a plain rational and combines with
/// anything.
class QuadExt {
 public:
  QuadExt() = default;
  template <std::signed_integral T>
  QuadExt(T value) : a_(value) {}
  QuadExt(Rational a) : a_(std::move(a)) {}
  QuadExt(Rational a, Rational b, Discriminant disc);

  /// sqrt(D) itself.
  static QuadExt sqrt_of(const Discriminant& disc) { return QuadExt(Rational(0), Rational(1), disc); }

  /// Inverse of to_string: "p/q", "p/q + r/s*sqrt(D)", "p/q - r/s*sqrt(D)"
  /// or "r/s*sqrt(D)".
  static QuadExt parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  const Discriminant& disc() const { return disc_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// True iff the value is one of 0, -1, -2, ...
  bool is_nonpositive_integer() const;

  QuadExt conj() const;
  /// x * conj(x), always rational.
  Rational norm() const;
  QuadExt inverse() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);

  std::string to_string() const;

 private:
  // Result discriminant for a binary operation; throws on a genuine mismatch.
  const Discriminant& common_disc(const QuadExt& rhs) const;

  Rational a_;
  Rational b_;
  Discriminant disc_;
};

/// Returns x as a rational; throws ArithmeticError("irrational result") if
/// its sqrt(D) coefficient is nonzero.
Rational as_rational(const QuadExt& x);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace hyperorder
