#include "hyperorder/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "hyperorder/errors.hpp"

namespace hyperorder {

Poly::Poly(Rational constant) : coeffs_{std::move(constant)} { trim(); }

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::var() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::lead() const {
  if (coeffs_.empty()) throw ArithmeticError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& k) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

Poly Poly::shifted(const Rational& h) const {
  // Horner in (k + h).
  const Poly step(std::vector<Rational>{h, Rational(1)});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + Poly(*it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = lead().inverse();
  Poly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

namespace {

std::string monomial(std::size_t power) {
  if (power == 0) return "";
  if (power == 1) return "k";
  return "k^" + std::to_string(power);
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (idx == 0) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += monomial(idx);
    } else {
      out += mag.to_string() + "*" + monomial(idx);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Rational> quot(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0);
  Poly rem = num;
  const Rational inv_lead = den.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const std::size_t shift = rem.degree() - den.degree();
    const Rational factor = rem.lead() * inv_lead;
    quot[shift] = factor;
    std::vector<Rational> term(shift + 1);
    term[shift] = factor;
    rem -= Poly(std::move(term)) * den;
  }
  return {Poly(std::move(quot)), std::move(rem)};
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw ArithmeticError("polynomial division is not exact");
  return q;
}

Poly gcd(const Poly& lhs, const Poly& rhs) {
  Poly a = lhs;
  Poly b = rhs;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational resultant(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Rational(0);
  const int m = lhs.degree();
  const int n = rhs.degree();
  if (n == 0) return pow(rhs.lead(), static_cast<unsigned>(m));
  if (m == 0) return pow(lhs.lead(), static_cast<unsigned>(n));
  const Poly r = divmod(lhs, rhs).second;
  if (r.is_zero()) return Rational(0);
  Rational scale = pow(rhs.lead(), static_cast<unsigned>(m - r.degree()));
  if ((m * n) % 2 == 1) scale = -scale;
  return scale * resultant(rhs, r);
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw UsageError("interpolate: point count mismatch");
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Poly(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result += basis * Poly(ys[i] / denom);
  }
  return result;
}

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    num_gcd = ::gcd(num_gcd, c.numerator());
    den_lcm = ::lcm(den_lcm, c.denominator());
  }
  Rational r(num_gcd, den_lcm);
  return p.lead().sign() < 0 ? -r : r;
}

std::vector<BigInt> nonnegative_integer_roots(const Poly& p) {
  if (p.is_zero()) throw ArithmeticError("root search on the zero polynomial");
  std::vector<BigInt> roots;
  // Strip the factor k^v so the remaining polynomial has a nonzero constant.
  std::size_t low = 0;
  while (p.coefficients()[low].is_zero()) ++low;
  if (low > 0) roots.push_back(0);
  const Rational c = content(p);
  std::vector<BigInt> ints;
  for (std::size_t i = low; i < p.coefficients().size(); ++i) {
    const Rational v = p.coefficients()[i] / c;
    ints.push_back(v.numerator());
  }
  const std::size_t deg = ints.size() - 1;
  if (deg == 0) return roots;
  // Fujiwara bound on root moduli, evaluated in log space.
  const auto log_abs = [](const BigInt& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
  };
  const double log_lead = log_abs(ints.back());
  double log_bound = -1e300;
  for (std::size_t i = 1; i <= deg; ++i) {
    const BigInt& ci = ints[deg - i];
    if (ci == 0) continue;
    log_bound = std::max(log_bound, (log_abs(ci) - log_lead) / static_cast<double>(i));
  }
  const double bound = 2.0 * std::exp(log_bound) + 1.0;
  if (bound > 1e7) throw CapacityError("integer root bound too large: " + std::to_string(bound));
  const long limit = static_cast<long>(std::ceil(bound));
  // Also require the candidate to divide the constant term.
  const BigInt& constant = ints.front();
  for (long h = 1; h <= limit; ++h) {
    if (!mpz_divisible_ui_p(constant.get_mpz_t(), static_cast<unsigned long>(h))) continue;
    BigInt acc = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * h + *it;
    if (acc == 0) roots.push_back(h);
  }
  return roots;
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const Rational inv = den_.lead().inverse();
  num_ *= Poly(inv);
  den_ *= Poly(inv);
}

Rational RatFunc::operator()(const Rational& k) const {
  const Rational d = den_(k);
  if (d.is_zero()) throw ArithmeticError("rational function has a pole at k = " + k.to_string());
  return num_(k) / d;
}

RatFunc RatFunc::shifted(const Rational& h) const { return RatFunc(num_.shifted(h), den_.shifted(h)); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by the zero rational function");
  *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RatFunc::to_pretty_string() const {
  if (num_.is_zero()) return "0";
  const Rational cn = content(num_);
  const Rational cd = content(den_);
  const Poly pn = num_ * Poly(cn.inverse());
  const Poly pd = den_ * Poly(cd.inverse());
  const Rational scale = cn / cd;
  const BigInt top = scale.numerator();
  const BigInt bottom = scale.denominator();

  std::string out = top < 0 ? "-" : "";
  const BigInt top_abs = ::abs(top);
  const bool num_poly = pn.degree() > 0;
  if (!num_poly) {
    out += top_abs.get_str();
  } else {
    const auto terms = std::count_if(pn.coefficients().begin(), pn.coefficients().end(),
                                     [](const Rational& c) { return !c.is_zero(); });
    const bool wrap = terms > 1;
    if (top_abs != 1) out += top_abs.get_str() + "*";
    out += wrap ? "(" + pn.to_string() + ")" : pn.to_string();
  }
  const bool den_poly = pd.degree() > 0;
  if (!den_poly && bottom == 1) return out;
  out += "/";
  if (!den_poly) return out + bottom.get_str();
  if (bottom == 1) return out + "(" + pd.to_string() + ")";
  return out + "(" + bottom.get_str() + "*(" + pd.to_string() + "))";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("cannot parse rational function '" + std::string(text_) + "': " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip();
    return pos_ < text_.size() &&
           (text_[pos_] == 'k' || text_[pos_] == '(' || std::isdigit(static_cast<unsigned char>(text_[pos_])));
  }

  RatFunc expression() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        acc /= unary();
      } else if (starts_primary()) {
        acc *= power();  // implicit product such as 2k or 3(k+1)
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer");
    const unsigned exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    RatFunc r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
  }

  RatFunc primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'k') {
      ++pos_;
      return RatFunc(Poly::var());
    }
    if (c == '(') {
      ++pos_;
      RatFunc inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      BigInt v(std::string(text_.substr(start, pos_ - start)));
      return RatFunc(Poly(Rational(v)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return ExprParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace hyperorder
