#include "hyperorder/gosper.hpp"

#include <algorithm>
#include <vector>

#include "hyperorder/errors.hpp"

namespace hyperorder {

namespace {

// Polynomial in k with Q(sqrt D) coefficients, ascending.
using SurdPoly = std::vector<QuadExt>;

SurdPoly multiply_linear(const SurdPoly& p, const QuadExt& root_shift) {
  // p(k) * (k + root_shift)
  SurdPoly out(p.size() + 1, QuadExt(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i] * root_shift;
    out[i + 1] += p[i];
  }
  return out;
}

Poly to_rational_poly(const SurdPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) {
    if (!c.is_rational()) throw ArithmeticError("ratio not rational: coefficient " + c.to_string());
    coeffs.push_back(c.rational_part());
  }
  return Poly(std::move(coeffs));
}

// Solves M x = rhs over Q; any free unknowns are set to zero.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

// Res_k(a(k), b(k+h)) as a polynomial in h, by interpolation.
Poly shift_resultant(const Poly& a, const Poly& b) {
  const std::size_t points = static_cast<std::size_t>(a.degree() * b.degree()) + 1;
  std::vector<Rational> hs;
  std::vector<Rational> values;
  for (std::size_t i = 0; i < points; ++i) {
    const Rational h(static_cast<long>(i));
    hs.push_back(h);
    values.push_back(resultant(a, b.shifted(h)));
  }
  return interpolate(hs, values);
}

// Degree bound for x in a(k) x(k+1) - b(k-1) x(k) = c(k); negative if none.
long degree_bound(const Poly& a, const Poly& b_prev, const Poly& c) {
  const long da = a.degree();
  const long db = b_prev.degree();
  const long dc = c.degree();
  if (da != db || a.lead() != b_prev.lead()) return dc - std::max(da, db);
  long bound = dc - da + 1;
  const Rational lead = a.lead();
  const Rational a_next = da > 0 ? a.coeff(da - 1) : Rational(0);
  const Rational b_next = db > 0 ? b_prev.coeff(db - 1) : Rational(0);
  const Rational special = (b_next - a_next) / lead;
  if (special.is_integer() && special.sign() >= 0 && special.numerator().fits_slong_p()) {
    bound = std::max(bound, special.numerator().get_si());
  }
  return bound;
}

}  // namespace

RatFunc term_ratio(std::span<const QuadExt> upper, std::span<const QuadExt> lower) {
  SurdPoly num{QuadExt(1)};
  for (const auto& a : upper) num = multiply_linear(num, a);
  SurdPoly den{QuadExt(1)};
  for (const auto& b : lower) den = multiply_linear(den, b);
  den = multiply_linear(den, QuadExt(1));
  return RatFunc(to_rational_poly(num), to_rational_poly(den));
}

RatFunc term_ratio(const HTerm& term) { return term_ratio(term.upper(), term.lower()); }

std::optional<RatFunc> gosper_find(const RatFunc& ratio) {
  if (ratio.is_zero()) return RatFunc(-1);  // t_k vanishes for k >= 1
  Poly a = ratio.num();
  Poly b = ratio.den();
  Poly c(1);

  // Split off c so that gcd(a(k), b(k+h)) = 1 for every integer h >= 0.
  if (a.degree() > 0 && b.degree() > 0) {
    for (const BigInt& hv : nonnegative_integer_roots(shift_resultant(a, b))) {
      const Rational h(hv);
      for (;;) {
        const Poly g = gcd(a, b.shifted(h));
        if (g.degree() <= 0) break;
        a = exact_div(a, g);
        b = exact_div(b, g.shifted(-h));
        for (BigInt i = 1; i <= hv; ++i) c *= g.shifted(-Rational(i));
      }
    }
  }

  const Poly b_prev = b.shifted(Rational(-1));
  const long bound = degree_bound(a, b_prev, c);
  if (bound < 0) return std::nullopt;

  const std::size_t unknowns = static_cast<std::size_t>(bound) + 1;
  std::vector<Poly> columns;
  std::size_t rows = static_cast<std::size_t>(c.degree()) + 1;
  for (std::size_t j = 0; j < unknowns; ++j) {
    std::vector<Rational> basis(j + 1);
    basis[j] = Rational(1);
    const Poly kj(std::move(basis));
    Poly col = a * kj.shifted(Rational(1)) - b_prev * kj;
    if (col.degree() >= 0) rows = std::max(rows, static_cast<std::size_t>(col.degree()) + 1);
    columns.push_back(std::move(col));
  }
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(unknowns));
  std::vector<Rational> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) m[i][j] = columns[j].coeff(i);
    rhs[i] = c.coeff(i);
  }
  const auto solution = solve_linear(std::move(m), std::move(rhs));
  if (!solution) return std::nullopt;
  const Poly x(*solution);
  if (x.is_zero()) return std::nullopt;
  return RatFunc(b_prev * x, c);
}

CertificateCheck verify_certificate(const Certificate& cert) {
  CertificateCheck check;
  for (std::size_t k = 0; k <= cert.last + 1; ++k) {
    if (cert.r.has_pole_at(Rational(static_cast<long>(k)))) {
      check.pole = static_cast<std::int64_t>(k);
      check.detail = "R has a pole at k = " + std::to_string(k);
      return check;
    }
  }
  RatFunc ratio;
  try {
    ratio = term_ratio(cert.term);
  } catch (const Error& e) {
    check.detail = e.what();
    return check;
  }
  const RatFunc residual = cert.r.shifted(Rational(1)) * ratio - cert.r;
  if (!(residual == RatFunc(1))) {
    check.detail = "R(k+1) t_{k+1}/t_k - R(k) = " + residual.to_string() + ", expected 1";
    return check;
  }
  check.ok = true;
  return check;
}

QuadExt telescoped_sum(const Certificate& cert, std::int64_t k0, std::int64_t k1) {
  if (k1 < k0) return QuadExt(0);
  if (k0 < 0 || static_cast<std::size_t>(k1) > cert.last) {
    throw DomainError("summation range [" + std::to_string(k0) + ", " + std::to_string(k1) +
                      "] outside certificate range [0, " + std::to_string(cert.last) + "]");
  }
  if (const auto check = verify_certificate(cert); !check) throw ArithmeticError("invalid certificate: " + check.detail);
  const auto upper = static_cast<std::size_t>(k1) + 1;
  const auto lower = static_cast<std::size_t>(k0);
  return QuadExt(cert.r(Rational(static_cast<long>(upper)))) * cert.term.term(upper) -
         QuadExt(cert.r(Rational(static_cast<long>(lower)))) * cert.term.term(lower);
}

}  // namespace hyperorder
