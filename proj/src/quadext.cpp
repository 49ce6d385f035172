#include "hyperorder/quadext.hpp"

#include <ostream>
#include <regex>

#include "hyperorder/errors.hpp"

namespace hyperorder {

Discriminant::Discriminant(Rational radicand) : radicand_(std::move(radicand)) {
  is_square_ = rational_sqrt(radicand_, root_);
}

QuadExt::QuadExt(Rational a, Rational b, Discriminant disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {
  if (disc_.is_square()) {
    a_ += b_ * disc_.root();
    b_ = Rational(0);
  }
}

QuadExt QuadExt::parse(std::string_view text) {
  static const std::string rat = R"([+-]?\d+(?:/\d+)?)";
  static const std::regex pure("^\\s*(" + rat + ")\\s*$");
  static const std::regex mixed("^\\s*(" + rat + ")\\s*([+-])\\s*(\\d+(?:/\\d+)?)\\*sqrt\\((" + rat +
                                ")\\)\\s*$");
  static const std::regex surd("^\\s*(" + rat + ")\\*sqrt\\((" + rat + ")\\)\\s*$");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, pure)) return QuadExt(Rational::parse(m[1].str()));
  if (std::regex_match(s, m, mixed)) {
    Rational b = Rational::parse(m[3].str());
    if (m[2].str() == "-") b = -b;
    return QuadExt(Rational::parse(m[1].str()), b, Discriminant(Rational::parse(m[4].str())));
  }
  if (std::regex_match(s, m, surd)) {
    return QuadExt(Rational(0), Rational::parse(m[1].str()), Discriminant(Rational::parse(m[2].str())));
  }
  throw UsageError("cannot parse quadratic-extension value '" + s + "'");
}

bool QuadExt::is_nonpositive_integer() const {
  return is_rational() && a_.is_integer() && a_.sign() <= 0;
}

const Discriminant& QuadExt::common_disc(const QuadExt& rhs) const {
  if (disc_ == rhs.disc_ || rhs.disc_.is_square()) return disc_;
  if (disc_.is_square()) return rhs.disc_;
  throw UsageError("cannot combine values over sqrt(" + disc_.radicand().to_string() + ") and sqrt(" +
                   rhs.disc_.radicand().to_string() + ")");
}

QuadExt QuadExt::conj() const { return QuadExt(a_, -b_, disc_); }

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * disc_.radicand(); }

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw ArithmeticError("division by zero");
  return QuadExt(a_ / n, -b_ / n, disc_);
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, disc_); }

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  disc_ = common_disc(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  disc_ = common_disc(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  Discriminant d = common_disc(rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d.radicand();
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  disc_ = std::move(d);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  disc_ = common_disc(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
  if (lhs.a_ != rhs.a_ || lhs.b_ != rhs.b_) return false;
  // Rationals compare equal regardless of the extension they live in.
  return lhs.b_.is_zero() || lhs.disc_ == rhs.disc_;
}

std::string QuadExt::to_string() const {
  if (is_rational()) return a_.to_string();
  const std::string surd = "*sqrt(" + disc_.radicand().to_string() + ")";
  const std::string sign = b_.sign() < 0 ? " - " : " + ";
  return a_.to_string() + sign + b_.abs().to_string() + surd;
}

Rational as_rational(const QuadExt& x) {
  if (!x.is_rational()) throw ArithmeticError("irrational result: " + x.to_string());
  return x.rational_part();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace hyperorder
