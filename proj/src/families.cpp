#include "hyperorder/families.hpp"

#include "hyperorder/errors.hpp"

namespace hyperorder {

namespace {

Rational frac(std::int64_t num, std::int64_t den) { return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))); }

QuadExt surd_pair(const Rational& base, const Rational& scale, const Discriminant& disc, int sign) {
  return QuadExt(base, sign > 0 ? scale : -scale, disc);
}

void check_domain(const FamilyInstance& inst) {
  switch (inst.family) {
    case Family::t1:
      if (inst.n < 3 || inst.n % 3 == 2) throw DomainError("family t1 needs n >= 3 with n mod 3 in {0, 1}");
      break;
    case Family::t1mod2:
      if (inst.n < 5 || inst.n % 3 != 2) throw DomainError("family t1mod2 needs n >= 5 with n mod 3 = 2");
      break;
    case Family::t2:
      if (inst.m < 1 || inst.n < 2) throw DomainError("family t2 needs m >= 1 and n >= 2");
      break;
  }
}

std::string substitute(std::string_view pattern, const FamilyInstance& inst) {
  std::string out;
  for (const char c : pattern) {
    if (c == 'n') {
      out += "(" + std::to_string(inst.n) + ")";
    } else if (c == 'm') {
      out += "(" + std::to_string(inst.m) + ")";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::t1:
      return "t1";
    case Family::t1mod2:
      return "t1mod2";
    case Family::t2:
      return "t2";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "t1") return Family::t1;
  if (name == "t1mod2") return Family::t1mod2;
  if (name == "t2") return Family::t2;
  throw UsageError("unknown family '" + std::string(name) + "' (expected t1, t1mod2 or t2)");
}

FamilyInstance theorem1_family(std::int64_t n) {
  return {n % 3 == 2 ? Family::t1mod2 : Family::t1, 0, n};
}

Discriminant x_discriminant(std::int64_t n) {
  Rational d = Rational(1) + Rational(6 * n) - Rational(3) * Rational(n) * Rational(n);
  if (d.is_zero()) throw ArithmeticError("zero discriminant for X_n");
  return Discriminant(std::move(d));
}

Discriminant y_discriminant(std::int64_t m, std::int64_t n) {
  const Rational two_m_1(2 * m + 1);
  Rational d = two_m_1 * two_m_1 - Rational(8) * Rational(m) * Rational(n);
  if (d.is_zero()) throw ArithmeticError("zero discriminant for Y_{m,n}");
  return Discriminant(std::move(d));
}

HTerm family_term(const FamilyInstance& inst) {
  check_domain(inst);
  const Rational n(inst.n);
  switch (inst.family) {
    case Family::t1: {
      const auto x = x_discriminant(inst.n);
      const Rational base = (Rational(11) - n) / Rational(6);
      return HTerm({Rational(1) - n / Rational(3), frac(4, 3) - n / Rational(3), QuadExt(2)},
                   {surd_pair(base, frac(1, 6), x, +1), surd_pair(base, frac(1, 6), x, -1)});
    }
    case Family::t1mod2: {
      const auto x = x_discriminant(inst.n);
      const Rational base = (Rational(13) - n) / Rational(6);
      return HTerm({frac(5, 3) - n / Rational(3), Rational(1) - n / Rational(3), QuadExt(2)},
                   {surd_pair(base, frac(1, 6), x, +1), surd_pair(base, frac(1, 6), x, -1)});
    }
    case Family::t2: {
      const auto y = y_discriminant(inst.m, inst.n);
      const Rational base = (Rational(9) + Rational(2 * inst.m) - Rational(2) * n) / Rational(4);
      return HTerm({Rational(1) - n / Rational(2), frac(3, 2) - n / Rational(2), QuadExt(2)},
                   {surd_pair(base, frac(1, 4), y, +1), surd_pair(base, frac(1, 4), y, -1)});
    }
  }
  throw UsageError("unknown family");
}

std::size_t family_last_index(const FamilyInstance& inst) {
  if (inst.family == Family::t2) return static_cast<std::size_t>(inst.n / 2);
  return family_term(inst).order();
}

Rational family_closed_form(const FamilyInstance& inst) {
  check_domain(inst);
  const Rational n(inst.n);
  switch (inst.family) {
    case Family::t1:
      return (n * n - Rational(4) * n + Rational(6)) / (Rational(3) * n - Rational(6));
    case Family::t1mod2:
      return (n * n - Rational(5) * n + Rational(12)) / (Rational(3) * n - Rational(3));
    case Family::t2: {
      const Rational m(inst.m);
      return (Rational(6) + Rational(4) * m - Rational(5) * n + n * n) / (Rational(4) * m);
    }
  }
  throw UsageError("unknown family");
}

RatFunc printed_certificate(const FamilyInstance& inst) {
  check_domain(inst);
  switch (inst.family) {
    case Family::t1:
      return RatFunc::parse(substitute(kPrintedR1, inst));
    case Family::t1mod2:
      return RatFunc::parse(substitute(kPrintedR1Mod2, inst));
    case Family::t2:
      return RatFunc::parse(substitute(kPrintedR2, inst));
  }
  throw UsageError("unknown family");
}

Certificate family_certificate(const FamilyInstance& inst, RatFunc r) {
  return Certificate{std::move(r), family_term(inst), family_last_index(inst)};
}

nlohmann::json certificate_to_json(const RatFunc& r, const FamilyInstance& inst) {
  nlohmann::json j;
  auto coeffs = [](const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
    return arr;
  };
  j["num"] = coeffs(r.num());
  j["den"] = coeffs(r.den());
  j["family"] = std::string(family_name(inst.family));
  j["params"] = {{"n", inst.n}};
  if (inst.family == Family::t2) j["params"]["m"] = inst.m;
  return j;
}

std::pair<Certificate, FamilyInstance> certificate_from_json(const nlohmann::json& j) {
  try {
    auto poly = [](const nlohmann::json& arr) {
      std::vector<Rational> coeffs;
      for (const auto& c : arr) coeffs.push_back(Rational::parse(c.get<std::string>()));
      return Poly(std::move(coeffs));
    };
    FamilyInstance inst{parse_family(j.at("family").get<std::string>()), 0, j.at("params").at("n").get<std::int64_t>()};
    if (inst.family == Family::t2) inst.m = j.at("params").at("m").get<std::int64_t>();
    RatFunc r(poly(j.at("num")), poly(j.at("den")));
    return {family_certificate(inst, std::move(r)), inst};
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace hyperorder
