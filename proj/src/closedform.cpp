#include "hyperorder/closedform.hpp"

#include <algorithm>

#include "hyperorder/errors.hpp"
#include "hyperorder/families.hpp"
#include "hyperorder/quadext.hpp"

namespace hyperorder {

Rational poly_binomial(std::int64_t x, unsigned r) {
  BigInt num = 1;
  for (unsigned i = 0; i < r; ++i) num *= BigInt(static_cast<long>(x - static_cast<std::int64_t>(i)));
  return Rational(num, factorial(r));
}

Rational coeff(CoeffKind kind, std::int64_t m, std::int64_t n, std::int64_t j) {
  const Rational M(m);
  const Rational N(n);
  const Rational J(j);
  switch (kind) {
    case CoeffKind::c:
      return J * J + (Rational(3) - Rational(3) * N) * J + Rational(3) * N * N - Rational(6) * N + Rational(2);
    case CoeffKind::b:
      return Rational(9) * J * J - Rational(3) * (N - Rational(1)) * J + N * N - Rational(2) * N;
    case CoeffKind::d: {
      // d_{j+1} = 2j^2 + (5-2m-2n) j + (6-6m-5n+4mn+n^2)/2
      const Rational i = J - Rational(1);
      return Rational(2) * i * i + (Rational(5) - Rational(2) * M - Rational(2) * N) * i +
             (Rational(6) - Rational(6) * M - Rational(5) * N + Rational(4) * M * N + N * N) / Rational(2);
    }
    case CoeffKind::p:
      return Rational(2) * J * J - (Rational(2) * M + Rational(1)) * J + M * N;
    case CoeffKind::q:
      return M * N - poly_binomial(m + 1, 2) + poly_binomial(j, 2);
  }
  throw UsageError("unknown coefficient kind");
}

Rational coeff_c_quotient(std::int64_t n, std::int64_t j) {
  if (j == 0) throw DomainError("c_j quotient form needs j != 0");
  return Rational(6) / Rational(j) * (poly_binomial(n, 3) - poly_binomial(n - j, 3));
}

Rational coeff_d_quotient(std::int64_t m, std::int64_t n, std::int64_t j) {
  if (j == 0) throw DomainError("d_j quotient form needs j != 0");
  return (Rational(m) * poly_binomial(n, 2) - Rational(m - j) * poly_binomial(n - 2 * j, 2)) / Rational(j);
}

Rational prod_skip_zeros(std::span<const Rational> values) {
  Rational acc(1);
  for (const auto& v : values) {
    if (!v.is_zero()) acc *= v;
  }
  return acc;
}

Rational lhs_theorem1(std::int64_t n) {
  if (n < 3) throw DomainError("the L(K_n^(3)) formula needs n >= 3");
  const Rational total = poly_binomial(n, 3);
  Rational sum(0);
  Rational product(1);
  for (std::int64_t i = 0; i <= n / 3 - 1; ++i) {
    if (i > 0) {
      const Rational tail = poly_binomial(n - 3 * i, 3);
      product *= -tail / (total - tail);
    }
    sum += product;
  }
  return sum;
}

Rational rhs_theorem1(std::int64_t n) {
  if (n < 3) throw DomainError("the L(K_n^(3)) formula needs n >= 3");
  Rational num(n / 3);
  for (std::int64_t j = n + 1; j <= (3 * n) / 2 - 2; ++j) {
    if (j % 3 == 0) continue;
    const Rational c = coeff(CoeffKind::c, 0, n, j);
    if (c.is_zero()) throw ArithmeticError("c_" + std::to_string(j) + " vanishes");
    num *= c;
  }
  Rational den(1);
  for (std::int64_t j = 3; j <= n - 3; j += 3) {
    const Rational c = coeff(CoeffKind::c, 0, n, j);
    if (c.is_zero()) throw ArithmeticError("c_" + std::to_string(j) + " vanishes");
    den *= c;
  }
  return num / den;
}

Rational lhs_theorem2(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 2) throw DomainError("the L(K_{m,n}^(1,2)) formula needs m >= 1 and n >= 2");
  const Rational total = Rational(m) * poly_binomial(n, 2);
  Rational sum(0);
  Rational product(1);
  for (std::int64_t i = 0; i <= std::min(m, n / 2); ++i) {
    if (i > 0) {
      const Rational tail = Rational(m - i) * poly_binomial(n - 2 * i, 2);
      const Rational den = total - tail;
      if (den.is_zero()) throw ArithmeticError("vanishing denominator at j = " + std::to_string(i));
      product *= -tail / den;
    }
    sum += product;
  }
  return sum;
}

Rational rhs_theorem2(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 2) throw DomainError("the L(K_{m,n}^(1,2)) formula needs m >= 1 and n >= 2");
  std::vector<Rational> qs;
  std::vector<Rational> ds;
  for (std::int64_t j = 1; j <= m - 1; ++j) {
    qs.push_back(coeff(CoeffKind::q, m, n, j));
    ds.push_back(coeff(CoeffKind::d, m, n, j));
  }
  return Rational(m) * prod_skip_zeros(qs) / prod_skip_zeros(ds);
}

bool lemma_checks(std::int64_t m, std::int64_t n) {
  const Discriminant disc = y_discriminant(m, n);
  if (!disc.is_square()) return true;  // every term carries a nonzero sqrt part
  const Rational y = disc.root();
  const Rational M(m);
  const Rational N(n);
  const Rational low = Rational(2) - N / Rational(2);
  for (const int sign : {+1, -1}) {
    const Rational sy = sign > 0 ? y : -y;
    const Rational lower = (Rational(9) + Rational(2) * M - Rational(2) * N + sy) / Rational(4);
    if (lower.is_integer() && lower.sign() <= 0) return false;
    for (const Rational& v : {(Rational(5) - Rational(2) * M - Rational(2) * N + sy) / Rational(4),
                              (Rational(-1) - Rational(2) * M + sy) / Rational(4)}) {
      if (v.is_integer() && v.sign() <= 0 && v >= low) return false;
    }
  }
  return true;
}

bool VerifyReport::passed() const {
  return !stages.empty() && std::all_of(stages.begin(), stages.end(), [](const Stage& s) { return s.ok; });
}

std::string VerifyReport::instance() const {
  if (theorem == 2) return "m=" + std::to_string(m) + ",n=" + std::to_string(n);
  return "n=" + std::to_string(n);
}

const Stage* VerifyReport::first_failure() const {
  for (const auto& s : stages) {
    if (!s.ok) return &s;
  }
  return nullptr;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["theorem"] = report.theorem;
  j["instance"] = report.instance();
  j["params"] = {{"n", report.n}};
  if (report.theorem == 2) j["params"]["m"] = report.m;
  j["lhs"] = report.lhs.to_string();
  j["rhs"] = report.rhs.to_string();
  j["pass"] = report.passed();
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : report.stages) {
    stages.push_back({{"name", s.name}, {"ok", s.ok}, {"value", s.value}, {"detail", s.detail}});
  }
  j["stages"] = std::move(stages);
  return j;
}

std::string csv_header() { return "instance,lhs,rhs,pass"; }

std::string to_csv_row(const VerifyReport& report) {
  return "\"" + report.instance() + "\"," + report.lhs.to_string() + "," + report.rhs.to_string() + "," +
         (report.passed() ? "true" : "false");
}

}  // namespace hyperorder
