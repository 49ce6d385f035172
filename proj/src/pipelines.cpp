#include <algorithm>
#include <exception>
#include <functional>
#include <map>

#include "hyperorder/closedform.hpp"
#include "hyperorder/errors.hpp"
#include "hyperorder/families.hpp"
#include "hyperorder/gosper.hpp"
#include "hyperorder/hypergeom.hpp"

namespace hyperorder {

namespace {

using Indices = std::vector<std::int64_t>;

Rational frac(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Indices gather(std::int64_t lo, std::int64_t hi, const std::function<std::int64_t(std::int64_t)>& index) {
  Indices out;
  for (std::int64_t j = lo; j <= hi; ++j) out.push_back(index(j));
  return out;
}

Indices concat(Indices a, const Indices& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// q_j = q_{1-j}, so max(j, 1-j) is a canonical representative.
bool reflection_equal(const Indices& lhs, const Indices& rhs) {
  auto canon = [](const Indices& in) {
    Indices out;
    for (const auto j : in) out.push_back(std::max(j, 1 - j));
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(lhs) == canon(rhs);
}

Rational q_product(std::int64_t m, std::int64_t n, const Indices& idx) {
  std::vector<Rational> values;
  for (const auto j : idx) values.push_back(coeff(CoeffKind::q, m, n, j));
  return prod_skip_zeros(values);
}

IdentityCheck q_product_check(std::string name, std::int64_t m, std::int64_t n, const Indices& lhs,
                              const Indices& rhs) {
  IdentityCheck check{std::move(name)};
  const bool same_indices = reflection_equal(lhs, rhs);
  const Rational left = q_product(m, n, lhs);
  const Rational right = q_product(m, n, rhs);
  check.ok = same_indices && left == right;
  if (!check.ok) {
    check.detail = (same_indices ? std::string() : "index multisets differ; ") + "products " + left.to_string() +
                   " vs " + right.to_string();
  }
  return check;
}

// Accumulates sub-check failures for one stage.
class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition) failures_.push_back(what);
  }
  void absorb(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks) expect(c.ok, c.detail.empty() ? c.name : c.name + " (" + c.detail + ")");
  }
  void finish(Stage& stage) const {
    stage.ok = failures_.empty();
    for (std::size_t i = 0; i < failures_.size(); ++i) stage.detail += (i ? "; " : "") + failures_[i];
  }

 private:
  std::vector<std::string> failures_;
};

template <class Fn>
void run_stage(VerifyReport& report, std::string name, Fn&& fn) {
  Stage stage{std::move(name)};
  try {
    fn(stage);
  } catch (const std::exception& e) {
    stage.ok = false;
    stage.detail = e.what();
  }
  report.stages.push_back(std::move(stage));
}

QuadExt surd(const Rational& base, const Rational& scale, const Discriminant& disc, int sign) {
  return QuadExt(base, sign > 0 ? scale : -scale, disc);
}

QuadExt quadratic_product(std::int64_t count, const std::function<Rational(const Rational&)>& factor) {
  Rational acc(1);
  for (std::int64_t j = 0; j < count; ++j) acc *= factor(Rational(j));
  return QuadExt(acc);
}

// Shared Gosper stage: find, verify, compare with the printed certificate, telescope.
void gosper_stage(Stage& stage, const FamilyInstance& inst, const HTerm& transformed, Rational& closed) {
  Checker check;
  const HTerm term = family_term(inst);
  check.expect(same_parameters(term, transformed), "transformed term is not the tabulated summand");
  const auto found = gosper_find(term_ratio(term));
  check.expect(found.has_value(), "gosper_find reports no antidifference");
  const Certificate printed = family_certificate(inst, printed_certificate(inst));
  const auto printed_ok = verify_certificate(printed);
  check.expect(printed_ok.ok, "printed certificate rejected: " + printed_ok.detail);
  if (found) {
    const Certificate cert = family_certificate(inst, *found);
    const auto found_ok = verify_certificate(cert);
    check.expect(found_ok.ok, "found certificate rejected: " + found_ok.detail);
    check.expect(*found == printed.r, "found R = " + found->to_pretty_string() + " differs from printed R = " +
                                          printed.r.to_pretty_string());
  }
  closed = family_closed_form(inst);
  const QuadExt direct = eval_3f2(term);
  check.expect(direct == QuadExt(closed), "direct summation gives " + direct.to_string());
  if (printed_ok.ok) {
    const QuadExt tele = telescoped_sum(printed, 0, static_cast<std::int64_t>(printed.last));
    check.expect(tele == QuadExt(closed), "telescoped sum gives " + tele.to_string());
  }
  stage.value = closed.to_string();
  check.finish(stage);
}

}  // namespace

std::vector<IdentityCheck> theorem1_coefficient_checks(std::int64_t n) {
  auto c = [n](std::int64_t j) { return coeff(CoeffKind::c, 0, n, j); };
  std::vector<IdentityCheck> out;

  IdentityCheck reflect{"c_k = c_{3n-3-k}", true};
  for (std::int64_t k = 0; k <= 3 * n - 3; ++k) {
    if (c(k) != c(3 * n - 3 - k)) {
      reflect.ok = false;
      reflect.detail = "k = " + std::to_string(k);
      break;
    }
  }
  out.push_back(reflect);

  IdentityCheck b_maps{"b_j = c_{n-1+3j} = c_{2n-2-3j}", true};
  for (std::int64_t j = 0; j <= n; ++j) {
    const Rational b = coeff(CoeffKind::b, 0, n, j);
    if (b != c(n - 1 + 3 * j) || b != c(2 * n - 2 - 3 * j)) {
      b_maps.ok = false;
      b_maps.detail = "j = " + std::to_string(j);
      break;
    }
  }
  out.push_back(b_maps);

  IdentityCheck shifted{"c_{3j+3} = 9j^2 + 9(3-n)j + 3n^2 - 15n + 20", true};
  const Rational N(n);
  for (std::int64_t j = 0; j <= n; ++j) {
    const Rational J(j);
    const Rational expect = Rational(9) * J * J + Rational(9) * (Rational(3) - N) * J + Rational(3) * N * N -
                            Rational(15) * N + Rational(20);
    if (c(3 * j + 3) != expect) {
      shifted.ok = false;
      shifted.detail = "j = " + std::to_string(j);
      break;
    }
  }
  out.push_back(shifted);

  IdentityCheck quotient{"c_j = (6/j)(C(n,3) - C(n-j,3))", true};
  for (std::int64_t j = 1; j <= 3 * n; ++j) {
    if (coeff_c_quotient(n, j) != c(j)) {
      quotient.ok = false;
      quotient.detail = "j = " + std::to_string(j);
      break;
    }
  }
  out.push_back(quotient);
  return out;
}

std::vector<IdentityCheck> theorem1_product_checks(std::int64_t n) {
  if (n < 3) throw DomainError("the L(K_n^(3)) formula needs n >= 3");
  const std::int64_t r = n % 3;
  const std::int64_t terms = n / 3 - 1;  // termination order N
  const Rational closed = family_closed_form(theorem1_family(n));
  const Rational floor3(n / 3);
  const Rational N(n);
  auto c = [n](std::int64_t j) { return coeff(CoeffKind::c, 0, n, j); };
  auto index_of = [&](std::int64_t j) { return r == 0 ? n - 1 + 3 * j : n + 3 * j; };
  auto numerator_factor = [&](std::int64_t j) {
    if (r == 0) return coeff(CoeffKind::b, 0, n, j);
    const Rational J(j);
    return Rational(9) * J * J + Rational(3) * (Rational(3) - N) * J + N * N - Rational(3) * N + Rational(2);
  };
  std::vector<IdentityCheck> out;

  IdentityCheck numer{"numerator factors are c-values", true};
  for (std::int64_t j = 0; j < terms; ++j) {
    if (numerator_factor(j) != c(index_of(j))) {
      numer.ok = false;
      numer.detail = "j = " + std::to_string(j);
      break;
    }
  }
  out.push_back(numer);

  IdentityCheck denom{"denominator factors are c_3, c_6, ..., c_{3N}", true};
  {
    Indices mult3;
    for (std::int64_t j = 3; j <= n - 3; j += 3) mult3.push_back(j);
    const Indices used = gather(0, terms - 1, [](std::int64_t j) { return 3 * j + 3; });
    denom.ok = mult3 == used;
    if (!denom.ok) denom.detail = "index sets differ";
  }
  out.push_back(denom);

  const std::int64_t first = r == 2 ? n + 2 : n + 1;
  if (terms >= 1) {
    IdentityCheck lead{"leading ratio", true};
    const Rational ratio = numerator_factor(0) / c(first);
    lead.ok = ratio == floor3 / closed;
    if (r == 0) lead.ok = lead.ok && ratio == N * (N - Rational(2)) / (N * N - Rational(4) * N + Rational(6));
    if (r == 2) {
      lead.ok = lead.ok &&
                ratio == (N - Rational(2)) * (N - Rational(1)) / (N * N - Rational(5) * N + Rational(12));
    }
    if (!lead.ok) lead.detail = "b_0/c_" + std::to_string(first) + " = " + ratio.to_string();
    out.push_back(lead);
  }

  const std::int64_t top = (3 * n) / 2 - 2;
  Indices target;
  for (std::int64_t j = first + 1; j <= top; ++j) {
    if (j % 3 != 0) target.push_back(j);
  }
  auto in_target = [&](std::int64_t k) { return std::binary_search(target.begin(), target.end(), k); };
  IdentityCheck bijection{"numerator indices tile the right-hand range", true};
  IdentityCheck split{"split at ceil(n/6)", true};
  Indices mapped;
  for (std::int64_t j = 1; j < terms; ++j) {
    const std::int64_t k = index_of(j);
    const std::int64_t mirror = 3 * n - 3 - k;
    const bool direct = in_target(k);
    if (direct == in_target(mirror) || c(k) != c(mirror)) {
      bijection.ok = false;
      bijection.detail = "j = " + std::to_string(j);
      break;
    }
    mapped.push_back(direct ? k : mirror);
    if (r == 0 && direct != (j <= (n + 5) / 6 - 1)) {
      split.ok = false;
      split.detail = "j = " + std::to_string(j);
    }
  }
  std::sort(mapped.begin(), mapped.end());
  if (bijection.ok && mapped != target) {
    bijection.ok = false;
    bijection.detail = "index sets differ";
  }
  out.push_back(bijection);
  if (r == 0) out.push_back(split);

  IdentityCheck product{"split product identity", true};
  Rational left = closed;
  for (std::int64_t j = 0; j < terms; ++j) left *= c(index_of(j));
  Rational right = floor3;
  for (std::int64_t j = n + 1; j <= top; ++j) {
    if (j % 3 != 0) right *= c(j);
  }
  product.ok = left == right;
  if (!product.ok) product.detail = left.to_string() + " vs " + right.to_string();
  out.push_back(product);
  return out;
}

std::vector<IdentityCheck> theorem2_identity_checks(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 2 || n % 2 != 0) throw DomainError("the product identities need m >= 1 and even n >= 2");
  const std::int64_t h = n / 2;
  auto q = [&](std::int64_t j) { return coeff(CoeffKind::q, m, n, j); };
  auto p = [&](std::int64_t j) { return coeff(CoeffKind::p, m, n, j); };
  auto d = [&](std::int64_t j) { return coeff(CoeffKind::d, m, n, j); };
  std::vector<IdentityCheck> out;

  auto scan = [&](std::string name, std::int64_t lo, std::int64_t hi, const std::function<bool(std::int64_t)>& ok) {
    IdentityCheck check{std::move(name), true};
    for (std::int64_t j = lo; j <= hi; ++j) {
      if (!ok(j)) {
        check.ok = false;
        check.detail = "j = " + std::to_string(j);
        break;
      }
    }
    out.push_back(std::move(check));
  };
  scan("q_j = q_{1-j}", -(m + n), m + n + 1, [&](std::int64_t j) { return q(j) == q(1 - j); });
  scan("p_j = q_{m-2j+1} = q_{2j-m}", -(m + n), m + n,
       [&](std::int64_t j) { return p(j) == q(m - 2 * j + 1) && p(j) == q(2 * j - m); });
  scan("d_j = p_{m+n/2-j} = q_{m+n-2j}", -(m + n), m + n,
       [&](std::int64_t j) { return d(j) == p(m + h - j) && d(j) == q(m + n - 2 * j); });
  scan("d_j quotient form", 1, m + n, [&](std::int64_t j) { return coeff_d_quotient(m, n, j) == d(j); });

  {
    const Rational M(m);
    const Rational N(n);
    const Rational g = Rational(6) + Rational(4) * M - Rational(5) * N + N * N;
    IdentityCheck ratio{"4m^2 q_{m-n+1} q_{m-n+3} = (6+4m-5n+n^2) q_m q_{m+1}", true};
    ratio.ok = Rational(4) * M * M * q(m - n + 1) * q(m - n + 3) == g * q(m) * q(m + 1);
    out.push_back(ratio);

    IdentityCheck sus{"reduced prefactor identity", true};
    std::vector<Rational> ps;
    std::vector<Rational> dshift;
    for (std::int64_t j = 0; j <= h - 2; ++j) {
      ps.push_back(p(j));
      dshift.push_back(d(j + 1));
    }
    const bool no_zero = std::none_of(ps.begin(), ps.end(), [](const Rational& v) { return v.is_zero(); }) &&
                         std::none_of(dshift.begin(), dshift.end(), [](const Rational& v) { return v.is_zero(); });
    std::vector<Rational> qs;
    std::vector<Rational> ds;
    for (std::int64_t j = 1; j <= m - 1; ++j) {
      qs.push_back(q(j));
      ds.push_back(d(j));
    }
    const Rational left = prod_skip_zeros(ps) / prod_skip_zeros(dshift);
    const Rational right = Rational(4) * M * M / g * prod_skip_zeros(qs) / prod_skip_zeros(ds);
    sus.ok = no_zero && left == right;
    if (!no_zero) sus.detail = "zero factor on the left";
    out.push_back(sus);
  }

  auto q_idx = [](std::int64_t lo, std::int64_t hi, std::function<std::int64_t(std::int64_t)> f) {
    return gather(lo, hi, std::move(f));
  };
  const Indices one_to_m1 = q_idx(1, m + 1, [](std::int64_t j) { return j; });
  const Indices odd_side = q_idx(0, h, [&](std::int64_t j) { return m - 2 * j + 1; });
  out.push_back(q_product_check(
      "master product identity", m, n, concat(odd_side, q_idx(1, m - 1, [&](std::int64_t j) { return m + n - 2 * j; })),
      concat(one_to_m1, q_idx(1, h - 1, [&](std::int64_t j) { return m + n - 2 * j; }))));

  const Indices evens_m = q_idx(0, (m + 1) / 2 - 1, [&](std::int64_t j) { return m - 2 * j; });
  const Indices odds_m = q_idx(0, m / 2, [&](std::int64_t j) { return m - 2 * j + 1; });
  if (h < m) {
    const Indices tail = q_idx(h, m - 1, [&](std::int64_t j) { return m + n - 2 * j; });
    out.push_back(q_product_check("case 1 reduced identity", m, n, concat(odd_side, tail), one_to_m1));
    if (n <= m) {
      const Indices low = q_idx(0, m / 2 - h - 1, [&](std::int64_t j) { return m - n - 1 - 2 * j; });
      out.push_back(q_product_check("case 1A tail re-indexing", m, n, tail, concat(low, evens_m)));
      out.push_back(q_product_check("case 1A odd merge", m, n, concat(odd_side, low), odds_m));
      out.push_back(q_product_check("case 1A final", m, n, concat(odds_m, evens_m), one_to_m1));
    } else {
      const Indices reflected = q_idx(0, h - m / 2 - 1, [&](std::int64_t j) { return n - m - 2 * j; });
      out.push_back(q_product_check("case 1B head re-indexing", m, n, odd_side, concat(odds_m, reflected)));
      out.push_back(q_product_check("case 1B even merge", m, n, concat(tail, reflected), evens_m));
      out.push_back(q_product_check("case 1B final", m, n, concat(odds_m, evens_m), one_to_m1));
    }
  } else {
    const Indices tail = q_idx(m, h - 1, [&](std::int64_t j) { return m + n - 2 * j; });
    out.push_back(q_product_check("case 2 reduced identity", m, n, odd_side, concat(one_to_m1, tail)));
    out.push_back(q_product_check("case 2 tail re-indexing", m, n,
                                  q_idx(m + 1, h, [&](std::int64_t j) { return m - 2 * j + 1; }), tail));
    const Indices head = q_idx(0, m / 2, [&](std::int64_t j) { return m - 2 * j + 1; });  // up to ceil((m-1)/2)
    const Indices middle = q_idx((m + 2) / 2, m, [&](std::int64_t j) { return m - 2 * j + 1; });
    const Indices evens = q_idx(0, (m - 1) / 2, [&](std::int64_t j) { return m - 2 * j; });
    out.push_back(q_product_check("case 2 middle re-indexing", m, n, middle, evens));
    out.push_back(q_product_check("case 2 final", m, n, concat(head, evens), one_to_m1));
  }
  return out;
}

VerifyReport pipeline_theorem1(std::int64_t n) {
  VerifyReport report;
  report.theorem = 1;
  report.n = n;
  if (n < 3) {
    report.stages.push_back({"domain", false, "", "n must be at least 3"});
    return report;
  }
  const std::int64_t r = n % 3;
  const std::size_t order = static_cast<std::size_t>(n / 3 - 1);
  const Rational N(n);
  const Discriminant disc = x_discriminant(n);
  auto sixth = [&](const Rational& base, int sign) { return surd(base / Rational(6), frac(1, 6), disc, sign); };

  run_stage(report, "factorization", [&](Stage& stage) {
    Checker check;
    const QuadExt x = QuadExt::sqrt_of(disc);
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(order); ++j) {
      const Rational J(j);
      const Rational tail = poly_binomial(n - 3 * j, 3);
      check.expect(-tail == -(N - Rational(3) * J) * (N - Rational(1) - Rational(3) * J) *
                                (N - Rational(2) - Rational(3) * J) / Rational(6),
                   "numerator at j = " + std::to_string(j));
      const QuadExt centre = QuadExt(Rational(3) * N - Rational(3)) / QuadExt(6);
      const QuadExt diff = QuadExt(frac(9, 2) * J) * (QuadExt(J) - centre - x / QuadExt(6)) *
                           (QuadExt(J) - centre + x / QuadExt(6));
      check.expect(diff == QuadExt(poly_binomial(n, 3) - tail), "denominator at j = " + std::to_string(j));
    }
    check.finish(stage);
  });

  std::optional<HTerm> original;
  run_stage(report, "hypergeometric form", [&](Stage& stage) {
    report.lhs = lhs_theorem1(n);
    const Rational third = N / Rational(3);
    original.emplace(HTerm::Upper{Rational(1) - third, frac(4, 3) - third, frac(5, 3) - third},
                     HTerm::Lower{sixth(Rational(9) - Rational(3) * N, +1), sixth(Rational(9) - Rational(3) * N, -1)});
    const Rational value = as_rational(eval_3f2(*original));
    stage.value = value.to_string();
    stage.ok = value == report.lhs;
    if (!stage.ok) stage.detail = "3F2 gives " + value.to_string() + ", sum gives " + report.lhs.to_string();
  });

  std::optional<SheppardResult> sheppard;
  run_stage(report, "sheppard", [&](Stage& stage) {
    if (!original) throw Error("no 3F2 form");
    Checker check;
    const Rational third = N / Rational(3);
    const Rational a = r == 0 ? frac(4, 3) - third : Rational(1) - third;
    const Rational b = r == 2 ? frac(4, 3) - third : frac(5, 3) - third;
    const QuadExt d = sixth(Rational(9) - Rational(3) * N, +1);
    const QuadExt e = sixth(Rational(9) - Rational(3) * N, -1);
    sheppard.emplace(sheppard_transform(order, a, b, d, e));
    check.expect(same_parameters(sheppard->transformed, family_term(theorem1_family(n))),
                 "transformed parameters differ from the tabulated summand");
    check.expect(sheppard->prefactor * eval_3f2(sheppard->transformed) == eval_3f2(*original),
                 "prefactor * transformed 3F2 != original 3F2");
    const auto count = static_cast<std::int64_t>(order);
    const QuadExt num_rf = rising_factorial(d - QuadExt(a), order) * rising_factorial(e - QuadExt(a), order);
    const QuadExt num_quad = quadratic_product(count, [&](const Rational& j) {
      if (r == 0) return j * j - (N - Rational(1)) / Rational(3) * j + (N * N - Rational(2) * N) / Rational(9);
      return j * j + (Rational(3) - N) / Rational(3) * j + (N * N - Rational(3) * N + Rational(2)) / Rational(9);
    });
    check.expect(num_rf == num_quad, "numerator rising factorials vs quadratic product");
    const QuadExt den_rf = rising_factorial(d, order) * rising_factorial(e, order);
    const QuadExt den_quad = quadratic_product(count, [&](const Rational& j) {
      return j * j + (Rational(3) - N) * j + (Rational(3) * N * N - Rational(15) * N + Rational(20)) / Rational(9);
    });
    check.expect(den_rf == den_quad, "denominator rising factorials vs quadratic product");
    stage.value = sheppard->prefactor.to_string();
    check.finish(stage);
  });

  Rational closed;
  run_stage(report, "gosper", [&](Stage& stage) {
    if (!sheppard) throw Error("no Sheppard transform");
    gosper_stage(stage, theorem1_family(n), sheppard->transformed, closed);
  });

  run_stage(report, "product splitting", [&](Stage& stage) {
    Checker check;
    check.absorb(theorem1_coefficient_checks(n));
    check.absorb(theorem1_product_checks(n));
    check.finish(stage);
  });

  run_stage(report, "final", [&](Stage& stage) {
    if (!sheppard) throw Error("no Sheppard transform");
    Checker check;
    report.rhs = rhs_theorem1(n);
    const Rational chain = as_rational(sheppard->prefactor * QuadExt(closed));
    check.expect(chain == report.rhs, "prefactor * closed form = " + chain.to_string());
    check.expect(report.lhs == report.rhs, "lhs != rhs");
    stage.value = report.rhs.to_string();
    check.finish(stage);
  });
  return report;
}

VerifyReport pipeline_theorem2(std::int64_t m, std::int64_t n) {
  VerifyReport report;
  report.theorem = 2;
  report.m = m;
  report.n = n;
  if (m < 1 || n < 2) {
    report.stages.push_back({"domain", false, "", "need m >= 1 and n >= 2"});
    return report;
  }
  const bool even = n % 2 == 0;
  const std::size_t order = static_cast<std::size_t>(even ? n / 2 - 1 : (n - 3) / 2);
  const Rational M(m);
  const Rational N(n);
  const Discriminant disc = y_discriminant(m, n);
  auto quarter = [&](const Rational& base, int sign) { return surd(base / Rational(4), frac(1, 4), disc, sign); };

  run_stage(report, "factorization", [&](Stage& stage) {
    Checker check;
    const QuadExt y = QuadExt::sqrt_of(disc);
    const Rational shift = (Rational(1) - Rational(2) * M - Rational(2) * N) / Rational(4);
    for (std::int64_t j = 1; j <= std::min(m, n / 2); ++j) {
      const Rational J(j);
      const Rational tail = Rational(m - j) * poly_binomial(n - 2 * j, 2);
      check.expect(-tail == Rational(2) * (J - N / Rational(2)) * (J + frac(1, 2) - N / Rational(2)) * (J - M),
                   "numerator at j = " + std::to_string(j));
      const QuadExt diff = QuadExt(Rational(2) * J) * (QuadExt(J + shift) + y / QuadExt(4)) *
                           (QuadExt(J + shift) - y / QuadExt(4));
      check.expect(diff == QuadExt(M * poly_binomial(n, 2) - tail), "denominator at j = " + std::to_string(j));
    }
    check.finish(stage);
  });

  run_stage(report, "admissibility", [&](Stage& stage) {
    stage.ok = lemma_checks(m, n);
    stage.value = disc.is_square() ? "Y = " + disc.root().to_string() : "Y irrational";
    if (!stage.ok) stage.detail = "a lower parameter or prefactor factor is a forbidden integer";
  });

  const Rational lower_base = Rational(5) - Rational(2) * M - Rational(2) * N;
  std::optional<HTerm> original;
  run_stage(report, "hypergeometric form", [&](Stage& stage) {
    report.lhs = lhs_theorem2(m, n);
    original.emplace(HTerm::Upper{Rational(1) - N / Rational(2), frac(3, 2) - N / Rational(2), Rational(1) - M},
                     HTerm::Lower{quarter(lower_base, +1), quarter(lower_base, -1)});
    const Rational value = as_rational(eval_3f2(*original));
    stage.value = value.to_string();
    stage.ok = value == report.lhs;
    if (!stage.ok) stage.detail = "3F2 gives " + value.to_string() + ", sum gives " + report.lhs.to_string();
  });

  std::optional<SheppardResult> sheppard;
  run_stage(report, "sheppard", [&](Stage& stage) {
    if (!original) throw Error("no 3F2 form");
    Checker check;
    const Rational a = even ? frac(3, 2) - N / Rational(2) : Rational(1) - N / Rational(2);
    const Rational b = Rational(1) - M;
    const QuadExt d = quarter(lower_base, +1);
    const QuadExt e = quarter(lower_base, -1);
    sheppard.emplace(sheppard_transform(order, a, b, d, e));
    check.expect(same_parameters(sheppard->transformed, family_term({Family::t2, m, n})),
                 "transformed parameters differ from the tabulated summand");
    check.expect(sheppard->prefactor * eval_3f2(sheppard->transformed) == eval_3f2(*original),
                 "prefactor * transformed 3F2 != original 3F2");
    const auto count = static_cast<std::int64_t>(order);
    const QuadExt num_rf = rising_factorial(d - QuadExt(a), order) * rising_factorial(e - QuadExt(a), order);
    const QuadExt num_quad = quadratic_product(count, [&](const Rational& j) {
      if (even) return j * j - (Rational(2) * M + Rational(1)) / Rational(2) * j + M * N / Rational(2);
      return j * j - (Rational(2) * M - Rational(1)) / Rational(2) * j + M * (N - Rational(1)) / Rational(2);
    });
    check.expect(num_rf == num_quad, "numerator rising factorials vs quadratic product");
    const QuadExt den_rf = rising_factorial(d, order) * rising_factorial(e, order);
    const QuadExt den_quad = quadratic_product(count, [&](const Rational& j) {
      return j * j + lower_base / Rational(2) * j +
             (Rational(6) - Rational(6) * M - Rational(5) * N + Rational(4) * M * N + N * N) / Rational(4);
    });
    check.expect(den_rf == den_quad, "denominator rising factorials vs quadratic product");
    if (even) {
      for (std::int64_t j = 0; j < count; ++j) {
        const Rational J(j);
        check.expect(coeff(CoeffKind::p, m, n, j) ==
                         Rational(2) * (J * J - (Rational(2) * M + Rational(1)) / Rational(2) * J + M * N / Rational(2)),
                     "p_" + std::to_string(j) + " is not twice the numerator factor");
        check.expect(coeff(CoeffKind::d, m, n, j + 1) ==
                         Rational(2) * (J * J + lower_base / Rational(2) * J +
                                        (Rational(6) - Rational(6) * M - Rational(5) * N + Rational(4) * M * N + N * N) /
                                            Rational(4)),
                     "d_" + std::to_string(j + 1) + " is not twice the denominator factor");
      }
    }
    stage.value = sheppard->prefactor.to_string();
    check.finish(stage);
  });

  Rational closed;
  run_stage(report, "gosper", [&](Stage& stage) {
    if (!sheppard) throw Error("no Sheppard transform");
    gosper_stage(stage, {Family::t2, m, n}, sheppard->transformed, closed);
  });

  if (even) {
    run_stage(report, "product identities", [&](Stage& stage) {
      Checker check;
      check.absorb(theorem2_identity_checks(m, n));
      check.finish(stage);
    });
  }

  run_stage(report, "final", [&](Stage& stage) {
    if (!sheppard) throw Error("no Sheppard transform");
    Checker check;
    report.rhs = rhs_theorem2(m, n);
    const Rational chain = as_rational(sheppard->prefactor * QuadExt(closed));
    check.expect(chain == report.rhs, "prefactor * closed form = " + chain.to_string());
    check.expect(report.lhs == report.rhs, "lhs != rhs");
    int q_zeros = 0;
    int d_zeros = 0;
    for (std::int64_t j = 1; j <= m - 1; ++j) {
      q_zeros += coeff(CoeffKind::q, m, n, j).is_zero();
      d_zeros += coeff(CoeffKind::d, m, n, j).is_zero();
    }
    stage.value = report.rhs.to_string();
    check.finish(stage);
    if (q_zeros + d_zeros > 0) {
      const std::string note =
          "skipped zero factors: " + std::to_string(q_zeros) + " in q, " + std::to_string(d_zeros) + " in d";
      stage.detail = stage.detail.empty() ? note : stage.detail + "; " + note;
    }
  });
  return report;
}

}  // namespace hyperorder
